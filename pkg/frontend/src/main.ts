/* Bootstraps the page: builds the DOM, opens the stream, and renders
 * the view model after every batch of server events. */

import { ServiceClient, SessionStream } from "./client.js";
import { ScreenKeyboard } from "./keyboard.js";
import { SoundBoard } from "./audio.js";
import { Speaker } from "./speech.js";
import { GameView } from "./viewmodel.js";

const GRID_CELLS = 9;

class App {
  private readonly view = new GameView();
  private readonly speaker = new Speaker();
  private readonly sounds = new SoundBoard();
  private readonly client = new ServiceClient();
  private stream: SessionStream | null = null;

  private readonly keyboard: ScreenKeyboard;
  private readonly scoreEl: HTMLElement;
  private readonly streakEl: HTMLElement;
  private readonly levelEl: HTMLElement;
  private readonly wordEl: HTMLElement;
  private readonly moleEl: HTMLElement;
  private readonly gridEl: HTMLElement;
  private readonly statusEl: HTMLElement;
  private readonly pauseButton: HTMLButtonElement;
  private readonly gridButtons: HTMLButtonElement[] = [];

  constructor(private readonly doc: Document, root: HTMLElement) {
    const header = doc.createElement("div");
    header.className = "header";
    this.scoreEl = this.badge(header, "score");
    this.streakEl = this.badge(header, "streak");
    this.levelEl = this.badge(header, "level");
    this.pauseButton = doc.createElement("button");
    this.pauseButton.textContent = "pause";
    this.pauseButton.addEventListener("click", () => this.togglePause());
    header.appendChild(this.pauseButton);
    const quit = doc.createElement("button");
    quit.textContent = "quit";
    quit.addEventListener("click", () => this.stream?.send({ type: "quit" }));
    header.appendChild(quit);
    root.appendChild(header);

    this.moleEl = doc.createElement("div");
    this.moleEl.className = "mole";
    root.appendChild(this.moleEl);

    this.wordEl = doc.createElement("div");
    this.wordEl.className = "word";
    root.appendChild(this.wordEl);

    this.keyboard = new ScreenKeyboard(
      doc,
      (letter) => this.stream?.send({ type: "key_hit", letter }),
      () => this.stream?.send({ type: "replay" }),
    );
    root.appendChild(this.keyboard.element);

    this.gridEl = doc.createElement("div");
    this.gridEl.className = "grid";
    for (let cell = 0; cell < GRID_CELLS; cell++) {
      const button = doc.createElement("button");
      button.className = "grid-cell";
      button.addEventListener("click", () => this.stream?.send({ type: "whack", cell }));
      this.gridButtons.push(button);
      this.gridEl.appendChild(button);
    }
    root.appendChild(this.gridEl);

    this.statusEl = doc.createElement("div");
    this.statusEl.className = "status";
    root.appendChild(this.statusEl);

    doc.addEventListener("keydown", (event) => {
      if (event.key.length === 1 && event.key >= "a" && event.key <= "z") {
        this.stream?.send({ type: "key_hit", letter: event.key });
      }
    });

    this.render();
  }

  private badge(parent: HTMLElement, label: string): HTMLElement {
    const wrap = this.doc.createElement("span");
    wrap.className = "badge";
    wrap.textContent = `${label}: `;
    const value = this.doc.createElement("strong");
    value.textContent = "0";
    wrap.appendChild(value);
    parent.appendChild(wrap);
    return value;
  }

  async start(playerId: string): Promise<void> {
    const sessionId = await this.client.createSession(playerId);
    this.stream = this.client.connect(sessionId, {
      onEvent: (event) => {
        this.view.apply(event);
        this.render();
      },
      onParseError: (error) => {
        this.statusEl.textContent = `protocol problem: ${error.message}`;
      },
      onClose: () => {
        this.statusEl.textContent = "disconnected";
      },
    });
  }

  private togglePause(): void {
    this.stream?.send({ type: this.view.paused ? "resume" : "pause" });
  }

  private render(): void {
    const view = this.view;
    this.scoreEl.textContent = String(view.score);
    this.streakEl.textContent = String(view.streak);
    this.levelEl.textContent = String(view.level);
    this.pauseButton.textContent = view.paused ? "resume" : "pause";

    this.wordEl.textContent = view.wordText();
    this.moleEl.textContent = view.revealed === null ? "" : view.revealed;
    this.moleEl.classList.toggle("mole-up", view.revealed !== null);

    this.keyboard.setVisible(view.keyboardVisible);
    this.keyboard.setBombs(view.bombs);
    this.gridEl.style.display = view.gridVisible ? "" : "none";
    const active = view.bonus?.activeCell ?? null;
    this.gridButtons.forEach((button, cell) => {
      button.classList.toggle("grid-active", cell === active);
    });

    for (const flash of view.takeFlashes()) {
      this.keyboard.flash(flash.letter, flash.color);
    }
    this.speaker.speakAll(view.takeSpeech());
    this.sounds.playAll(view.takeSounds());

    if (view.paused) {
      this.statusEl.textContent = "paused";
    } else if (view.mode === "idle") {
      this.statusEl.textContent = "session over";
    } else if (view.lastResult !== null && view.mode === "spelling") {
      const result = view.lastResult;
      this.statusEl.textContent = `${result.word}: ${result.points} points`;
    }
  }
}

function boot(doc: Document): void {
  const root = doc.getElementById("app");
  const form = doc.getElementById("start-form") as HTMLFormElement | null;
  const nameInput = doc.getElementById("player-name") as HTMLInputElement | null;
  if (!root || !form || !nameInput) {
    return;
  }
  const app = new App(doc, root);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const playerId = nameInput.value.trim();
    if (playerId.length === 0) {
      return;
    }
    form.style.display = "none";
    void app.start(playerId);
  });
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", () => boot(document));
}
