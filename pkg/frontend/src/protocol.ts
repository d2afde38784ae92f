// Wire protocol spoken by the session service (see docs/protocol.md).

export const PROTOCOL_VERSION = 1;

export type Color = "RED" | "BLUE";

export const UNDO_KEY = "UNDO";

export interface StateMessage {
  v: number;
  kind: "STATE";
  typed: string;
  colors: Record<string, Color>;
  belief?: Record<string, number>;
  theta_mean: number;
  step: number;
  selections: number;
}

export interface SessionEvent {
  type: string;
  key?: string;
  confidence?: number;
  text?: string;
  message?: string;
  colors?: Record<string, Color>;
}

export interface EventMessage {
  v: number;
  kind: "EVENT";
  event: SessionEvent;
}

export interface ErrorMessage {
  v: number;
  kind: "ERROR";
  code: string;
  message: string;
}

export type ServerMessage = StateMessage | EventMessage | ErrorMessage;

export function parseServerMessage(raw: string): ServerMessage {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch {
    throw new Error(`unparseable server message: ${raw.slice(0, 80)}`);
  }
  if (typeof data !== "object" || data === null) {
    throw new Error("server message is not an object");
  }
  const msg = data as { v?: unknown; kind?: unknown };
  if (msg.v !== PROTOCOL_VERSION) {
    throw new Error(`unsupported protocol version ${String(msg.v)}`);
  }
  if (msg.kind === "STATE" || msg.kind === "EVENT" || msg.kind === "ERROR") {
    return data as ServerMessage;
  }
  throw new Error(`unknown message kind ${String(msg.kind)}`);
}

export function clickMessage(color: Color): string {
  return JSON.stringify({ v: PROTOCOL_VERSION, kind: "CLICK", color });
}
