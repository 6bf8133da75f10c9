/* HTTP + WebSocket access to the session service. */

import {
  ClientEvent,
  LineSplitter,
  ServerEvent,
  WireError,
  encodeClientEvent,
  parseServerLine,
} from "./protocol.js";

export interface StreamCallbacks {
  onEvent(event: ServerEvent): void;
  onParseError?(error: WireError, line: string): void;
  onClose?(): void;
}

export class SessionStream {
  constructor(private readonly socket: WebSocket) {}

  send(event: ClientEvent): void {
    this.socket.send(encodeClientEvent(event));
  }

  close(): void {
    this.socket.close();
  }
}

export class ServiceClient {
  constructor(private readonly baseUrl: string = "") {}

  async createSession(playerId: string, seed?: number): Promise<string> {
    const body: Record<string, unknown> = { player_id: playerId };
    if (seed !== undefined) {
      body.seed = seed;
    }
    const response = await fetch(`${this.baseUrl}/sessions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = (await response.json()) as {
      session_id?: string;
      detail?: { code?: string; message?: string };
    };
    if (!response.ok || payload.session_id === undefined) {
      const detail = payload.detail;
      throw new Error(detail?.message ?? `session creation failed (${response.status})`);
    }
    return payload.session_id;
  }

  async fetchProgress(playerId: string): Promise<Record<string, unknown>> {
    const response = await fetch(`${this.baseUrl}/players/${playerId}/progress`);
    if (!response.ok) {
      throw new Error(`progress request failed (${response.status})`);
    }
    return (await response.json()) as Record<string, unknown>;
  }

  connect(sessionId: string, callbacks: StreamCallbacks): SessionStream {
    const http = this.baseUrl || window.location.origin;
    const ws = http.replace(/^http/, "ws");
    const socket = new WebSocket(`${ws}/sessions/${sessionId}/stream`);
    const splitter = new LineSplitter();
    socket.onmessage = (frame: MessageEvent<string>) => {
      for (const line of splitter.push(String(frame.data) + "\n")) {
        try {
          callbacks.onEvent(parseServerLine(line));
        } catch (error) {
          if (error instanceof WireError && callbacks.onParseError) {
            callbacks.onParseError(error, line);
          } else if (!(error instanceof WireError)) {
            throw error;
          }
        }
      }
    };
    socket.onclose = () => callbacks.onClose?.();
    return new SessionStream(socket);
  }
}
