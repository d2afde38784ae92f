// DOM wiring: renders the static keyboard, belief bars and typed text from
// the state store, connects the WebSocket, and routes inputs through the
// click gate. Key elements are created exactly once; later renders only
// touch colors, bars and text, so keys can never move.

import { selectionCue } from "./audio.js";
import { InputGate, PressOutcome } from "./input.js";
import { Color, UNDO_KEY, clickMessage, parseServerMessage } from "./protocol.js";
import { SettingsStore } from "./settings.js";
import { StateStore, UiState } from "./state.js";

const KEY_LABELS: Record<string, string> = { " ": "space", [UNDO_KEY]: "undo" };

export class App {
  private root: HTMLElement;
  private wsUrl: string;
  private store: StateStore;
  private settings: SettingsStore;
  private gate: InputGate;
  private socket: WebSocket | null = null;
  private retryDelay = 1000;
  private keyElements = new Map<string, HTMLElement>();
  private barElements = new Map<string, HTMLElement>();
  private els!: {
    keyboard: HTMLElement;
    bars: HTMLElement;
    typed: HTMLElement;
    status: HTMLElement;
    notice: HTMLElement;
    theta: HTMLElement;
    reconnect: HTMLButtonElement;
    left: HTMLButtonElement;
    right: HTMLButtonElement;
    swap: HTMLButtonElement;
  };

  constructor(root: HTMLElement, wsUrl: string) {
    this.root = root;
    this.wsUrl = wsUrl;
    this.store = new StateStore();
    this.settings = new SettingsStore(window.localStorage);
    this.gate = new InputGate(
      (color) => this.socket?.send(clickMessage(color)),
      (outcome, color) => this.onPressOutcome(outcome, color),
    );
    this.buildShell();
    this.store.subscribe((state) => this.render(state));
    this.store.onSelection(() => selectionCue());
    this.bindInputs();
    this.connect();
  }

  private buildShell(): void {
    this.root.innerHTML = `
      <header>
        <span id="status" class="status">connecting</span>
        <button id="reconnect" hidden>reconnect</button>
        <span id="theta" class="theta"></span>
      </header>
      <div id="typed" class="typed" aria-live="polite"></div>
      <div id="notice" class="notice" hidden></div>
      <div id="keyboard" class="keyboard"></div>
      <div id="bars" class="bars" title="belief over keys"></div>
      <div class="buttons">
        <button id="left" class="clicker"></button>
        <button id="right" class="clicker"></button>
      </div>
      <footer>
        <button id="swap">swap button colors</button>
        <span class="hint"></span>
      </footer>`;
    this.els = {
      keyboard: this.byId("keyboard"),
      bars: this.byId("bars"),
      typed: this.byId("typed"),
      status: this.byId("status"),
      notice: this.byId("notice"),
      theta: this.byId("theta"),
      reconnect: this.byId("reconnect") as HTMLButtonElement,
      left: this.byId("left") as HTMLButtonElement,
      right: this.byId("right") as HTMLButtonElement,
      swap: this.byId("swap") as HTMLButtonElement,
    };
    this.refreshButtonLabels();
  }

  private byId(id: string): HTMLElement {
    return this.root.querySelector(`#${id}`) as HTMLElement;
  }

  private bindInputs(): void {
    document.addEventListener("keydown", (event) => {
      if (event.repeat) return;
      const color = this.settings.colorForKey(event.key.toLowerCase());
      if (color) {
        event.preventDefault();
        this.gate.press(color);
      }
    });
    this.els.left.addEventListener("click", () =>
      this.gate.press(this.settings.settings.leftColor));
    this.els.right.addEventListener("click", () =>
      this.gate.press(this.settings.settings.rightColor));
    this.els.swap.addEventListener("click", () => {
      this.settings.swapColors();
      this.refreshButtonLabels();
    });
    this.els.reconnect.addEventListener("click", () => this.connect());
  }

  private refreshButtonLabels(): void {
    const { leftKey, rightKey, leftColor, rightColor } = this.settings.settings;
    this.els.left.textContent = `${leftColor} (${leftKey})`;
    this.els.right.textContent = `${rightColor} (${rightKey})`;
    this.els.left.className = `clicker ${leftColor.toLowerCase()}`;
    this.els.right.className = `clicker ${rightColor.toLowerCase()}`;
  }

  private connect(): void {
    this.store.setStatus("connecting");
    const socket = new WebSocket(this.wsUrl);
    this.socket = socket;
    socket.onopen = () => {
      this.retryDelay = 1000;
      this.gate.connected = true;
      this.store.setStatus("connected");
      this.store.setNotice(null);
    };
    socket.onmessage = (event) => this.onMessage(String(event.data));
    socket.onclose = () => {
      if (this.socket !== socket) return;
      this.gate.connected = false;
      this.gate.reset();
      this.store.setStatus("disconnected");
      setTimeout(() => {
        if (this.store.status === "disconnected") this.connect();
      }, this.retryDelay);
      this.retryDelay = Math.min(this.retryDelay * 2, 10_000);
    };
    socket.onerror = () => socket.close();
  }

  private onMessage(raw: string): void {
    const msg = parseServerMessage(raw);
    if (msg.kind === "STATE") {
      this.store.applyState(msg);
      this.gate.acknowledge();
    } else if (msg.kind === "EVENT") {
      this.store.applyEvent(msg);
    } else {
      this.store.setNotice(`server error ${msg.code}: ${msg.message}`);
    }
  }

  private onPressOutcome(outcome: PressOutcome, color: Color): void {
    if (outcome === "rejected") {
      this.store.setNotice("not connected: click not sent");
    } else if (outcome === "dropped") {
      this.store.setNotice("one click already waiting: extra input dropped");
    } else if (this.store.notice) {
      this.store.setNotice(null);
    }
  }

  private ensureKeyElements(state: UiState): void {
    if (this.keyElements.size > 0 || state.keys.length === 0) return;
    for (const view of state.keys) {
      const el = document.createElement("div");
      el.className = "key";
      el.dataset.key = view.key;
      el.style.gridRow = String(view.position.row + 1);
      el.style.gridColumn = String(view.position.col + 1);
      if (view.key === UNDO_KEY) el.classList.add("undo");
      if (view.key === " ") el.classList.add("space");
      const label = document.createElement("span");
      label.textContent = KEY_LABELS[view.key] ?? view.key;
      const dot = document.createElement("span");
      dot.className = "dot";
      el.append(label, dot);
      this.els.keyboard.append(el);
      this.keyElements.set(view.key, el);

      const bar = document.createElement("div");
      bar.className = "bar";
      const fill = document.createElement("div");
      fill.className = "fill";
      bar.append(fill);
      bar.title = KEY_LABELS[view.key] ?? view.key;
      this.els.bars.append(bar);
      this.barElements.set(view.key, fill);
    }
  }

  private render(state: UiState): void {
    this.ensureKeyElements(state);
    for (const view of state.keys) {
      const el = this.keyElements.get(view.key);
      if (!el) continue;
      el.classList.toggle("red", view.color === "RED");
      el.classList.toggle("blue", view.color === "BLUE");
      const fill = this.barElements.get(view.key);
      if (fill) fill.style.height = `${Math.round(view.belief * 100)}%`;
    }
    this.els.typed.textContent = state.typed || " ";
    this.els.status.textContent = state.status;
    this.els.status.className = `status ${state.status}`;
    this.els.theta.textContent =
      state.thetaMean > 0 ? `click accuracy ${(state.thetaMean * 100).toFixed(1)}%` : "";
    this.els.reconnect.hidden = state.status !== "disconnected";
    this.root.classList.toggle("offline", state.status !== "connected");
    this.els.notice.hidden = !state.notice;
    this.els.notice.textContent = state.notice ?? "";
  }
}
