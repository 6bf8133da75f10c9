import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { parseServerLine, ServerEvent } from "../src/protocol.js";
import { GameView } from "../src/viewmodel.js";

function fixtureEvents(name: string): ServerEvent[] {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return readFileSync(url, "utf-8").trim().split("\n").map(parseServerLine);
}

describe("a full recorded spelling round", () => {
  const events = fixtureEvents("occurrence-round.ndjson");

  it("flashes green once per accepted letter, in word order", () => {
    const view = new GameView();
    const greens: string[] = [];
    for (const event of events) {
      view.apply(event);
      for (const flash of view.takeFlashes()) {
        if (flash.color === "green") {
          greens.push(flash.letter);
        }
      }
    }
    expect(greens).toHaveLength(10);
    expect(greens.join("")).toBe("occurrence");
  });

  it("shows bomb keys exactly when the choice cue arrives", () => {
    const view = new GameView();
    for (const event of events) {
      const isBombCue =
        event.type === "effect" && event.effect.kind === "show_choice_bombs";
      if (isBombCue) {
        // Never any bombs on screen before their cue.
        expect(view.bombs.size).toBe(0);
      }
      view.apply(event);
      if (isBombCue && event.type === "effect" && event.effect.kind === "show_choice_bombs") {
        expect([...view.bombs].sort()).toEqual([...event.effect.letters].sort());
      }
    }
    // The last letter resolved, so nothing is left marked.
    expect(view.bombs.size).toBe(0);
  });

  it("ends with the word area reading occurrence", () => {
    const view = new GameView();
    view.applyAll(events);
    expect(view.wordText()).toBe("occurrence");
    expect(view.revealed).toBeNull();
    expect(view.lastResult?.word).toBe("occurrence");
    expect(view.lastResult?.points).toBe(85);
    expect(view.score).toBe(85);
  });

  it("fills the word area one accepted letter at a time", () => {
    const view = new GameView();
    const texts: string[] = [];
    for (const event of events) {
      view.apply(event);
      if (event.type === "effect" && event.effect.kind === "letter_accepted") {
        texts.push(view.wordText());
      }
    }
    expect(texts[0]).toBe("o_________");
    expect(texts[3]).toBe("occu______");
    expect(texts[9]).toBe("occurrence");
  });

  it("queues the word and each letter for speech", () => {
    const view = new GameView();
    const spoken: string[] = [];
    for (const event of events) {
      view.apply(event);
      spoken.push(...view.takeSpeech());
    }
    expect(spoken[0]).toBe("occurrence");
    expect(spoken.slice(1, 11).join("")).toBe("occurrence");
    expect(spoken[11]).toBe("labyrinth"); // the next round's word
  });
});

describe("a recorded bonus interlude", () => {
  const events = fixtureEvents("bonus-session.ndjson");

  it("swaps keyboard for grid and back with nothing left behind", () => {
    const view = new GameView();
    let sawStart = false;
    let sawEnd = false;
    for (const event of events) {
      if (event.type === "bonus_start") {
        sawStart = true;
        expect(view.keyboardVisible).toBe(true);
        expect(view.gridVisible).toBe(false);
      }
      view.apply(event);
      if (event.type === "bonus_start") {
        expect(view.gridVisible).toBe(true);
        expect(view.keyboardVisible).toBe(false);
        expect(view.bombs.size).toBe(0);
        expect(view.revealed).toBeNull();
      }
      if (event.type === "bonus_end") {
        sawEnd = true;
        expect(view.gridVisible).toBe(false);
        expect(view.keyboardVisible).toBe(true);
        expect(view.bonus).toBeNull();
      }
    }
    expect(sawStart).toBe(true);
    expect(sawEnd).toBe(true);
  });

  it("tracks the mole grid while the bonus runs", () => {
    const view = new GameView();
    const hitCounts: number[] = [];
    const activeCells: Array<number | null> = [];
    for (const event of events) {
      view.apply(event);
      if (view.mode === "bonus" && view.bonus !== null) {
        hitCounts.push(view.bonus.hits);
        activeCells.push(view.bonus.activeCell);
      }
    }
    expect(hitCounts).toEqual([0, 1, 2, 2]);
    expect(activeCells[0]).not.toBeNull();
    expect(view.bonus).toBeNull();
  });

  it("banks the whack points when the bonus ends", () => {
    const view = new GameView();
    let scoreAtBonusStart = 0;
    for (const event of events) {
      if (event.type === "bonus_start") {
        scoreAtBonusStart = view.score;
      }
      view.apply(event);
    }
    expect(scoreAtBonusStart).toBe(90);
    expect(view.score).toBe(100); // two whacks at five points each
  });

  it("returns to spelling with a fresh word and live key feedback", () => {
    const view = new GameView();
    const reds: string[] = [];
    const sounds: string[] = [];
    for (const event of events) {
      view.apply(event);
      reds.push(...view.takeFlashes().filter((f) => f.color === "red").map((f) => f.letter));
      sounds.push(...view.takeSounds());
    }
    expect(view.mode).toBe("spelling");
    expect(view.slots.length).toBe(3);
    // The stream ends on a wrong key: red flash, buzzer, mole reveal.
    expect(reds).toEqual(["m"]);
    expect(sounds.slice(-2)).toEqual(["buzzer", "explosion"]);
    expect(view.revealed).toBe("d");
  });
});

describe("snapshot handling", () => {
  const base = {
    type: "state_snapshot" as const,
    sessionId: "s",
    score: 7,
    streak: 2,
    level: 3,
    bonus: null,
  };

  it("restores bombs from a paused choice-hint snapshot", () => {
    const view = new GameView();
    view.apply({
      ...base,
      mode: "paused",
      round: {
        length: 3,
        accepted: "c",
        phaseKind: "choice_hint",
        choices: ["a", "k", "z"],
        revealed: null,
      },
    });
    expect(view.paused).toBe(true);
    expect(view.keyboardVisible).toBe(false);
    expect(view.wordText()).toBe("c__");
    expect([...view.bombs].sort()).toEqual(["a", "k", "z"]);
  });

  it("restores the reveal from a giveaway snapshot", () => {
    const view = new GameView();
    view.apply({
      ...base,
      mode: "spelling",
      round: {
        length: 2,
        accepted: "",
        phaseKind: "giveaway_reveal",
        choices: [],
        revealed: "a",
      },
    });
    expect(view.revealed).toBe("a");
    expect(view.bombs.size).toBe(0);
  });

  it("clears the playfield on an idle snapshot", () => {
    const view = new GameView();
    view.apply({
      ...base,
      mode: "spelling",
      round: {
        length: 3,
        accepted: "ca",
        phaseKind: "awaiting_input",
        choices: [],
        revealed: null,
      },
    });
    view.apply({ ...base, mode: "idle", round: null });
    expect(view.wordText()).toBe("");
    expect(view.keyboardVisible).toBe(false);
    expect(view.gridVisible).toBe(false);
  });

  it("reports protocol errors without disturbing the playfield", () => {
    const view = new GameView();
    view.apply({ type: "error", code: "event_not_allowed", message: "no whacking now" });
    expect(view.errors).toEqual([
      { code: "event_not_allowed", message: "no whacking now" },
    ]);
    expect(view.mode).toBe("idle");
  });
});
