/* Speech synthesis wrapper; a no-op where the API is missing. */

export class Speaker {
  constructor(private readonly rate = 0.9) {}

  private available(): boolean {
    return typeof window !== "undefined" && "speechSynthesis" in window;
  }

  speak(text: string): void {
    if (!this.available()) {
      return;
    }
    const utterance = new SpeechSynthesisUtterance(text);
    // Single letters are read as letter names; slow them down a touch
    // more than whole words so they stay distinct for young ears.
    utterance.rate = text.length === 1 ? this.rate * 0.9 : this.rate;
    utterance.pitch = 1.05;
    window.speechSynthesis.speak(utterance);
  }

  speakAll(texts: readonly string[]): void {
    for (const text of texts) {
      this.speak(text);
    }
  }

  stop(): void {
    if (this.available()) {
      window.speechSynthesis.cancel();
    }
  }
}
