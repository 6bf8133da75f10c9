/* On-screen keyboard: 26 letter keys plus a "say it again" key. */

const ROWS = ["qwertyuiop", "asdfghjkl", "zxcvbnm"];
const FLASH_MS = 450;

export class ScreenKeyboard {
  readonly element: HTMLElement;
  private readonly keys = new Map<string, HTMLButtonElement>();
  private readonly timers = new Map<string, number>();

  constructor(
    doc: Document,
    onKey: (letter: string) => void,
    onReplay: () => void,
  ) {
    this.element = doc.createElement("div");
    this.element.className = "keyboard";
    for (const row of ROWS) {
      const rowEl = doc.createElement("div");
      rowEl.className = "key-row";
      for (const letter of row) {
        const key = doc.createElement("button");
        key.className = "key";
        key.textContent = letter;
        key.dataset.letter = letter;
        key.addEventListener("click", () => onKey(letter));
        this.keys.set(letter, key);
        rowEl.appendChild(key);
      }
      this.element.appendChild(rowEl);
    }
    const controls = doc.createElement("div");
    controls.className = "key-row";
    const replay = doc.createElement("button");
    replay.className = "key key-wide";
    replay.textContent = "say it again";
    replay.addEventListener("click", onReplay);
    controls.appendChild(replay);
    this.element.appendChild(controls);
  }

  setVisible(visible: boolean): void {
    this.element.style.display = visible ? "" : "none";
  }

  setBombs(bombs: ReadonlySet<string>): void {
    for (const [letter, key] of this.keys) {
      key.classList.toggle("key-bomb", bombs.has(letter));
    }
  }

  flash(letter: string, color: "green" | "red"): void {
    const key = this.keys.get(letter);
    if (!key) {
      return;
    }
    const cls = color === "green" ? "key-green" : "key-red";
    key.classList.remove("key-green", "key-red");
    // Force a reflow so back-to-back flashes restart the animation.
    void key.offsetWidth;
    key.classList.add(cls);
    const pending = this.timers.get(letter);
    if (pending !== undefined) {
      window.clearTimeout(pending);
    }
    this.timers.set(
      letter,
      window.setTimeout(() => key.classList.remove(cls), FLASH_MS),
    );
  }
}
