/* Tiny synthesized sound effects; silent where WebAudio is missing. */

import type { SoundCue } from "./viewmodel.js";

export class SoundBoard {
  private context: AudioContext | null = null;

  private ensure(): AudioContext | null {
    if (typeof window === "undefined" || !("AudioContext" in window)) {
      return null;
    }
    if (this.context === null) {
      this.context = new AudioContext();
    }
    return this.context;
  }

  play(cue: SoundCue): void {
    const ctx = this.ensure();
    if (ctx === null) {
      return;
    }
    switch (cue) {
      case "chime":
        this.tone(ctx, 660, 0.0, 0.12, "sine");
        this.tone(ctx, 880, 0.1, 0.18, "sine");
        return;
      case "buzzer":
        this.tone(ctx, 110, 0.0, 0.28, "square", 0.15);
        return;
      case "explosion":
        this.noise(ctx, 0.35);
        return;
    }
  }

  playAll(cues: readonly SoundCue[]): void {
    for (const cue of cues) {
      this.play(cue);
    }
  }

  private tone(
    ctx: AudioContext,
    frequency: number,
    delay: number,
    duration: number,
    shape: OscillatorType,
    volume = 0.2,
  ): void {
    const oscillator = ctx.createOscillator();
    const gain = ctx.createGain();
    oscillator.type = shape;
    oscillator.frequency.value = frequency;
    const start = ctx.currentTime + delay;
    gain.gain.setValueAtTime(volume, start);
    gain.gain.exponentialRampToValueAtTime(0.001, start + duration);
    oscillator.connect(gain).connect(ctx.destination);
    oscillator.start(start);
    oscillator.stop(start + duration);
  }

  private noise(ctx: AudioContext, duration: number): void {
    const frames = Math.floor(ctx.sampleRate * duration);
    const buffer = ctx.createBuffer(1, frames, ctx.sampleRate);
    const data = buffer.getChannelData(0);
    for (let i = 0; i < frames; i++) {
      data[i] = (Math.random() * 2 - 1) * (1 - i / frames);
    }
    const source = ctx.createBufferSource();
    const gain = ctx.createGain();
    gain.gain.value = 0.25;
    source.buffer = buffer;
    source.connect(gain).connect(ctx.destination);
    source.start();
  }
}
