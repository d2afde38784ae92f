// Headless UI state: folds server messages into a renderable view model.
// Key positions are frozen when the first STATE arrives and never change.

import { DEFAULT_LAYOUT, Layout, Position, positionsFor } from "./layout.js";
import { Color, EventMessage, StateMessage } from "./protocol.js";

export type ConnectionStatus = "connecting" | "connected" | "disconnected";

export interface KeyView {
  key: string;
  position: Position;
  color: Color;
  belief: number;
}

export interface UiState {
  status: ConnectionStatus;
  typed: string;
  keys: KeyView[];
  thetaMean: number;
  step: number;
  selections: number;
  notice: string | null;
}

export type Listener = (state: UiState) => void;

export class StateStore {
  private layout: Layout;
  private positions: Map<string, Position> | null = null;
  private keyOrder: string[] = [];
  private colors = new Map<string, Color>();
  private belief = new Map<string, number>();
  private listeners: Listener[] = [];
  private selectionListeners: ((key: string, confidence: number) => void)[] = [];

  status: ConnectionStatus = "connecting";
  typed = "";
  thetaMean = 0;
  step = 0;
  selections = 0;
  notice: string | null = null;
  statesApplied = 0;

  constructor(layout: Layout = DEFAULT_LAYOUT) {
    this.layout = layout;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  onSelection(listener: (key: string, confidence: number) => void): void {
    this.selectionListeners.push(listener);
  }

  private emit(): void {
    const snapshot = this.snapshot();
    for (const listener of this.listeners) listener(snapshot);
  }

  setStatus(status: ConnectionStatus): void {
    this.status = status;
    this.emit();
  }

  setNotice(notice: string | null): void {
    this.notice = notice;
    this.emit();
  }

  applyState(msg: StateMessage): void {
    const serverKeys = Object.keys(msg.colors);
    if (this.positions === null) {
      // frozen on first contact: only keys the server serves, layout order
      this.positions = positionsFor(this.layout, serverKeys);
      this.keyOrder = [...this.positions.entries()]
        .filter(([key]) => serverKeys.includes(key))
        .sort(([, a], [, b]) => a.row - b.row || a.col - b.col)
        .map(([key]) => key);
    }
    for (const [key, color] of Object.entries(msg.colors)) {
      this.colors.set(key, color);
    }
    if (msg.belief) {
      for (const [key, p] of Object.entries(msg.belief)) {
        this.belief.set(key, p);
      }
    }
    this.typed = msg.typed;
    this.thetaMean = msg.theta_mean;
    this.step = msg.step;
    this.selections = msg.selections;
    this.statesApplied += 1;
    this.emit();
  }

  applyEvent(msg: EventMessage): void {
    const event = msg.event;
    if (event.type === "KEY_SELECTED" && event.key !== undefined) {
      for (const listener of this.selectionListeners) {
        listener(event.key, event.confidence ?? 0);
      }
    } else if (event.type === "WARNING" && event.message) {
      this.setNotice(event.message);
    }
    // TEXT_CHANGED and COLORS_CHANGED are reflected by the STATE message
    // that follows in the same reply
  }

  snapshot(): UiState {
    const keys: KeyView[] = this.keyOrder.map((key) => ({
      key,
      position: this.positions!.get(key)!,
      color: this.colors.get(key) ?? "BLUE",
      belief: this.belief.get(key) ?? 0,
    }));
    return {
      status: this.status,
      typed: this.typed,
      keys,
      thetaMean: this.thetaMean,
      step: this.step,
      selections: this.selections,
      notice: this.notice,
    };
  }
}
