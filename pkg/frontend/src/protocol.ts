/* Wire protocol: one JSON object per newline-terminated line.
 *
 * This mirrors the service's codec, including its strictness: unknown
 * message types, unknown effect kinds, missing fields, wrongly typed
 * fields, and stray extra fields are all rejected, never guessed at.
 */

export type Outcome = "unaided" | "after_choice_hint" | "after_giveaway";

export interface LetterRecord {
  letter: string;
  outcome: Outcome;
  wrongAttempts: number;
}

export interface RoundResult {
  word: string;
  records: LetterRecord[];
  points: number;
  quality: number;
  perfect: boolean;
}

export type Effect =
  | { kind: "speak_word"; text: string }
  | { kind: "speak_letter"; letter: string }
  | { kind: "letter_accepted"; letter: string; index: number }
  | { kind: "key_flash_green"; letter: string }
  | { kind: "key_flash_red"; letter: string }
  | { kind: "play_chime" }
  | { kind: "play_buzzer" }
  | { kind: "show_choice_bombs"; letters: string[] }
  | { kind: "explode_reveal_mole"; letter: string }
  | { kind: "round_complete"; result: RoundResult };

export type PhaseKind = "awaiting_input" | "choice_hint" | "giveaway_reveal";

export interface RoundView {
  length: number;
  accepted: string;
  phaseKind: PhaseKind;
  choices: string[];
  revealed: string | null;
}

export interface BonusView {
  gridCells: number;
  remainingMs: number;
  activeCell: number | null;
  hits: number;
}

export type SessionMode = "spelling" | "bonus" | "paused" | "idle";

export type ServerEvent =
  | { type: "effect"; effect: Effect }
  | {
      type: "state_snapshot";
      sessionId: string;
      score: number;
      streak: number;
      level: number;
      mode: SessionMode;
      round: RoundView | null;
      bonus: BonusView | null;
    }
  | { type: "round_result"; result: RoundResult; score: number; streak: number; level: number }
  | { type: "bonus_start" }
  | { type: "bonus_end"; points: number }
  | { type: "error"; code: string; message: string };

export type ClientEvent =
  | { type: "key_hit"; letter: string }
  | { type: "replay" }
  | { type: "whack"; cell: number }
  | { type: "pause" }
  | { type: "resume" }
  | { type: "quit" };

export class WireError extends Error {
  constructor(
    public readonly code:
      | "bad_json"
      | "unknown_type"
      | "unknown_field"
      | "missing_field"
      | "bad_field",
    message: string,
  ) {
    super(message);
    this.name = "WireError";
  }
}

type Json = Record<string, unknown>;

function asObject(value: unknown, what: string): Json {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new WireError("bad_field", `${what} must be an object`);
  }
  return value as Json;
}

function checkFields(data: Json, what: string, required: string[], ignore: string[] = []): void {
  const allowed = new Set([...required, ...ignore]);
  for (const key of Object.keys(data)) {
    if (!allowed.has(key)) {
      throw new WireError("unknown_field", `${what}: unknown field '${key}'`);
    }
  }
  for (const key of required) {
    if (!(key in data)) {
      throw new WireError("missing_field", `${what}: missing field '${key}'`);
    }
  }
}

function str(data: Json, key: string, what: string): string {
  const value = data[key];
  if (typeof value !== "string") {
    throw new WireError("bad_field", `${what}: field '${key}' must be a string`);
  }
  return value;
}

function int(data: Json, key: string, what: string): number {
  const value = data[key];
  if (typeof value !== "number" || !Number.isInteger(value)) {
    throw new WireError("bad_field", `${what}: field '${key}' must be an integer`);
  }
  return value;
}

function bool(data: Json, key: string, what: string): boolean {
  const value = data[key];
  if (typeof value !== "boolean") {
    throw new WireError("bad_field", `${what}: field '${key}' must be a boolean`);
  }
  return value;
}

function letterList(data: Json, key: string, what: string): string[] {
  const value = data[key];
  if (!Array.isArray(value) || !value.every((item) => typeof item === "string")) {
    throw new WireError("bad_field", `${what}: field '${key}' must be a list of strings`);
  }
  return value as string[];
}

const OUTCOMES: Outcome[] = ["unaided", "after_choice_hint", "after_giveaway"];

function parseResult(value: unknown): RoundResult {
  const data = asObject(value, "round result");
  checkFields(data, "round result", ["word", "records", "points", "quality", "perfect"]);
  const rawRecords = data.records;
  if (!Array.isArray(rawRecords)) {
    throw new WireError("bad_field", "round result: field 'records' must be a list");
  }
  const records = rawRecords.map((raw) => {
    const record = asObject(raw, "letter record");
    checkFields(record, "letter record", ["letter", "outcome", "wrong_attempts"]);
    const outcome = str(record, "outcome", "letter record");
    if (!OUTCOMES.includes(outcome as Outcome)) {
      throw new WireError("bad_field", `letter record: unknown outcome '${outcome}'`);
    }
    return {
      letter: str(record, "letter", "letter record"),
      outcome: outcome as Outcome,
      wrongAttempts: int(record, "wrong_attempts", "letter record"),
    };
  });
  return {
    word: str(data, "word", "round result"),
    records,
    points: int(data, "points", "round result"),
    quality: int(data, "quality", "round result"),
    perfect: bool(data, "perfect", "round result"),
  };
}

function parseEffect(value: unknown): Effect {
  const data = asObject(value, "effect");
  const kind = data.kind;
  switch (kind) {
    case "speak_word":
      checkFields(data, kind, ["text"], ["kind"]);
      return { kind, text: str(data, "text", kind) };
    case "speak_letter":
    case "key_flash_green":
    case "key_flash_red":
    case "explode_reveal_mole":
      checkFields(data, String(kind), ["letter"], ["kind"]);
      return { kind, letter: str(data, "letter", String(kind)) };
    case "letter_accepted":
      checkFields(data, kind, ["letter", "index"], ["kind"]);
      return { kind, letter: str(data, "letter", kind), index: int(data, "index", kind) };
    case "play_chime":
    case "play_buzzer":
      checkFields(data, String(kind), [], ["kind"]);
      return { kind };
    case "show_choice_bombs":
      checkFields(data, kind, ["letters"], ["kind"]);
      return { kind, letters: letterList(data, "letters", kind) };
    case "round_complete":
      checkFields(data, kind, ["result"], ["kind"]);
      return { kind, result: parseResult(data.result) };
    default:
      throw new WireError("unknown_type", `unknown effect kind '${String(kind)}'`);
  }
}

const PHASE_KINDS: PhaseKind[] = ["awaiting_input", "choice_hint", "giveaway_reveal"];
const MODES: SessionMode[] = ["spelling", "bonus", "paused", "idle"];

function parseRoundView(value: unknown): RoundView {
  const data = asObject(value, "round view");
  checkFields(data, "round view", ["length", "accepted", "phase_kind", "choices", "revealed"]);
  const phase = str(data, "phase_kind", "round view");
  if (!PHASE_KINDS.includes(phase as PhaseKind)) {
    throw new WireError("bad_field", `round view: unknown phase '${phase}'`);
  }
  const revealed = data.revealed;
  if (revealed !== null && typeof revealed !== "string") {
    throw new WireError("bad_field", "round view: field 'revealed' must be a string or null");
  }
  return {
    length: int(data, "length", "round view"),
    accepted: str(data, "accepted", "round view"),
    phaseKind: phase as PhaseKind,
    choices: letterList(data, "choices", "round view"),
    revealed,
  };
}

function parseBonusView(value: unknown): BonusView {
  const data = asObject(value, "bonus view");
  checkFields(data, "bonus view", ["grid_cells", "remaining_ms", "active_cell", "hits"]);
  const active = data.active_cell;
  if (active !== null && (typeof active !== "number" || !Number.isInteger(active))) {
    throw new WireError("bad_field", "bonus view: field 'active_cell' must be an integer or null");
  }
  return {
    gridCells: int(data, "grid_cells", "bonus view"),
    remainingMs: int(data, "remaining_ms", "bonus view"),
    activeCell: active,
    hits: int(data, "hits", "bonus view"),
  };
}

export function parseServerEvent(value: unknown): ServerEvent {
  const data = asObject(value, "server message");
  const type = data.type;
  switch (type) {
    case "effect":
      checkFields(data, type, ["effect"], ["type"]);
      return { type, effect: parseEffect(data.effect) };
    case "state_snapshot": {
      checkFields(
        data,
        type,
        ["session_id", "score", "streak", "level", "mode", "round", "bonus"],
        ["type"],
      );
      const mode = str(data, "mode", type);
      if (!MODES.includes(mode as SessionMode)) {
        throw new WireError("bad_field", `state_snapshot: unknown mode '${mode}'`);
      }
      return {
        type,
        sessionId: str(data, "session_id", type),
        score: int(data, "score", type),
        streak: int(data, "streak", type),
        level: int(data, "level", type),
        mode: mode as SessionMode,
        round: data.round === null ? null : parseRoundView(data.round),
        bonus: data.bonus === null ? null : parseBonusView(data.bonus),
      };
    }
    case "round_result":
      checkFields(data, type, ["result", "score", "streak", "level"], ["type"]);
      return {
        type,
        result: parseResult(data.result),
        score: int(data, "score", type),
        streak: int(data, "streak", type),
        level: int(data, "level", type),
      };
    case "bonus_start":
      checkFields(data, type, [], ["type"]);
      return { type };
    case "bonus_end":
      checkFields(data, type, ["points"], ["type"]);
      return { type, points: int(data, "points", type) };
    case "error":
      checkFields(data, type, ["code", "message"], ["type"]);
      return { type, code: str(data, "code", type), message: str(data, "message", type) };
    default:
      throw new WireError("unknown_type", `unknown server message type '${String(type)}'`);
  }
}

export function parseServerLine(line: string): ServerEvent {
  let value: unknown;
  try {
    value = JSON.parse(line);
  } catch (exc) {
    throw new WireError("bad_json", `message is not valid JSON: ${String(exc)}`);
  }
  return parseServerEvent(value);
}

export function encodeClientEvent(event: ClientEvent): string {
  return JSON.stringify(event) + "\n";
}

/* Reassembles newline-delimited messages from arbitrarily chunked
 * frames: a frame may hold several lines or a fraction of one. */
export class LineSplitter {
  private buffer = "";

  push(chunk: string): string[] {
    this.buffer += chunk;
    const parts = this.buffer.split("\n");
    this.buffer = parts.pop() ?? "";
    return parts.filter((line) => line.trim().length > 0);
  }

  /* Anything left without a trailing newline (normally nothing). */
  flush(): string | null {
    const rest = this.buffer.trim();
    this.buffer = "";
    return rest.length > 0 ? rest : null;
  }
}
