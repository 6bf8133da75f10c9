/* The playfield as pure data.
 *
 * Every server event is folded into this model; the DOM layer only
 * reads it. Steady state (word slots, bomb-marked keys, mode, score)
 * lives in fields; one-shot presentation (key flashes, speech, sound
 * cues) goes into queues the renderer drains. Keeping this free of DOM
 * references is what lets the whole game logic run under plain node.
 */

import type {
  BonusView,
  Effect,
  RoundResult,
  ServerEvent,
  SessionMode,
} from "./protocol.js";

export interface KeyFlash {
  letter: string;
  color: "green" | "red";
}

export type SoundCue = "chime" | "buzzer" | "explosion";

export interface GameError {
  code: string;
  message: string;
}

export class GameView {
  sessionId: string | null = null;
  score = 0;
  streak = 0;
  level = 1;
  mode: SessionMode = "idle";

  /* Word area: accepted letters by position, null while unresolved. */
  slots: (string | null)[] = [];
  /* Letter the mole is currently giving away, if any. */
  revealed: string | null = null;
  /* Keys marked as bomb choices until the letter resolves. */
  bombs = new Set<string>();

  bonus: BonusView | null = null;
  lastResult: RoundResult | null = null;
  errors: GameError[] = [];

  private flashQueue: KeyFlash[] = [];
  private speechQueue: string[] = [];
  private soundQueue: SoundCue[] = [];

  get keyboardVisible(): boolean {
    return this.mode === "spelling";
  }

  get gridVisible(): boolean {
    return this.mode === "bonus";
  }

  get paused(): boolean {
    return this.mode === "paused";
  }

  /* Word area text with underscores for unresolved positions. */
  wordText(): string {
    return this.slots.map((slot) => slot ?? "_").join("");
  }

  takeFlashes(): KeyFlash[] {
    return this.flashQueue.splice(0);
  }

  takeSpeech(): string[] {
    return this.speechQueue.splice(0);
  }

  takeSounds(): SoundCue[] {
    return this.soundQueue.splice(0);
  }

  apply(event: ServerEvent): void {
    switch (event.type) {
      case "effect":
        this.applyEffect(event.effect);
        return;
      case "state_snapshot":
        this.sessionId = event.sessionId;
        this.score = event.score;
        this.streak = event.streak;
        this.level = event.level;
        this.mode = event.mode;
        this.bonus = event.bonus;
        if (event.round === null) {
          this.slots = [];
          this.bombs.clear();
          this.revealed = null;
        } else {
          this.slots = Array.from({ length: event.round.length }, (_, i) =>
            i < event.round!.accepted.length ? event.round!.accepted[i] : null,
          );
          this.bombs = new Set(
            event.round.phaseKind === "choice_hint" ? event.round.choices : [],
          );
          this.revealed =
            event.round.phaseKind === "giveaway_reveal" ? event.round.revealed : null;
        }
        return;
      case "round_result":
        this.score = event.score;
        this.streak = event.streak;
        this.level = event.level;
        this.lastResult = event.result;
        return;
      case "bonus_start":
        // The keyboard goes away whole: no bombs or reveals may linger.
        this.mode = "bonus";
        this.bombs.clear();
        this.revealed = null;
        return;
      case "bonus_end":
        this.mode = "spelling";
        this.bonus = null;
        return;
      case "error":
        this.errors.push({ code: event.code, message: event.message });
        return;
    }
  }

  applyAll(events: Iterable<ServerEvent>): void {
    for (const event of events) {
      this.apply(event);
    }
  }

  private applyEffect(effect: Effect): void {
    switch (effect.kind) {
      case "speak_word":
        this.speechQueue.push(effect.text);
        return;
      case "speak_letter":
        this.speechQueue.push(effect.letter);
        return;
      case "letter_accepted":
        while (this.slots.length <= effect.index) {
          this.slots.push(null);
        }
        this.slots[effect.index] = effect.letter;
        this.bombs.clear();
        this.revealed = null;
        return;
      case "key_flash_green":
        this.flashQueue.push({ letter: effect.letter, color: "green" });
        return;
      case "key_flash_red":
        this.flashQueue.push({ letter: effect.letter, color: "red" });
        return;
      case "play_chime":
        this.soundQueue.push("chime");
        return;
      case "play_buzzer":
        this.soundQueue.push("buzzer");
        return;
      case "show_choice_bombs":
        this.bombs = new Set(effect.letters);
        return;
      case "explode_reveal_mole":
        this.revealed = effect.letter;
        this.bombs.clear();
        this.soundQueue.push("explosion");
        return;
      case "round_complete":
        this.lastResult = effect.result;
        return;
    }
  }
}
