// Conformance: a scripted client drives the real session service through
// the same pieces the browser app uses (protocol parser, state store,
// input gate), checking that keys never reposition across 100 STATE
// updates, every accepted input maps to exactly one CLICK on the wire,
// and the typed-text display always equals the last STATE's text.

import { ChildProcess, execFileSync, spawn } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";

import { InputGate } from "../src/input.js";
import { clickMessage, parseServerMessage } from "../src/protocol.js";
import { StateStore } from "../src/state.js";

const PORT = 17000 + Math.floor(Math.random() * 4000);
const WS_URL = `ws://127.0.0.1:${PORT}/ws`;

let workDir: string;
let server: ChildProcess | null = null;

async function waitForService(url: string, attempts = 50): Promise<void> {
  for (let i = 0; i < attempts; i += 1) {
    const ok = await new Promise<boolean>((resolve) => {
      const probe = new WebSocket(url);
      probe.on("open", () => { probe.close(); resolve(true); });
      probe.on("error", () => resolve(false));
    });
    if (ok) return;
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  workDir = mkdtempSync(join(tmpdir(), "colorkeys-ui-"));
  const corpus = join(workDir, "corpus.txt");
  const model = join(workDir, "model.lm");
  writeFileSync(corpus, [
    "hello world how are you",
    "hello there world",
    "how is the weather today",
    "the world says hello",
  ].join("\n"));
  execFileSync("python3", ["-m", "colorkeys.cli", "train",
    "--corpus", corpus, "--order", "3", "--out", model]);
  server = spawn("python3", ["-m", "colorkeys.cli", "serve",
    "--model", model, "--listen", `127.0.0.1:${PORT}`], {
    stdio: "ignore",
  });
  await waitForService(WS_URL);
}, 60_000);

afterAll(() => {
  server?.kill();
  rmSync(workDir, { recursive: true, force: true });
});

describe("UI conformance against the real service", () => {
  it("holds positions, click accounting, and text display over 100 states",
    async () => {
      const store = new StateStore();
      const socket = new WebSocket(WS_URL);
      await new Promise<void>((resolve, reject) => {
        socket.on("open", () => resolve());
        socket.on("error", reject);
      });

      const gate = new InputGate((color) => socket.send(clickMessage(color)));
      gate.connected = true;
      store.setStatus("connected");

      const TARGET_CLICKS = 100;
      let pressesAttempted = 0;
      let lastStateTyped: string | null = null;
      let initialPositions: string | null = null;
      const positionViolations: number[] = [];

      const positionsFingerprint = () =>
        JSON.stringify(store.snapshot().keys.map(
          (k) => [k.key, k.position.row, k.position.col]));

      const pressSome = () => {
        while (pressesAttempted < TARGET_CLICKS) {
          const color = pressesAttempted % 3 === 0 ? "BLUE" : "RED";
          const outcome = gate.press(color);
          if (outcome === "sent" || outcome === "buffered") {
            pressesAttempted += 1;
            // occasionally stack a second press to exercise the buffer
            if (pressesAttempted % 7 !== 0) return;
          } else {
            return; // gate full; wait for the next acknowledgement
          }
        }
      };

      const done = new Promise<void>((resolve, reject) => {
        socket.on("message", (raw) => {
          const msg = parseServerMessage(String(raw));
          if (msg.kind === "STATE") {
            store.applyState(msg);
            lastStateTyped = msg.typed;
            if (initialPositions === null) {
              initialPositions = positionsFingerprint();
            } else if (positionsFingerprint() !== initialPositions) {
              positionViolations.push(msg.step);
            }
            gate.acknowledge();
            if (msg.step >= TARGET_CLICKS) {
              resolve();
            } else {
              pressSome();
            }
          } else if (msg.kind === "EVENT") {
            store.applyEvent(msg);
          } else {
            reject(new Error(`server error: ${msg.message}`));
          }
        });
        socket.on("error", reject);
      });

      // the initial STATE arrives on connect and kicks everything off
      await done;
      socket.close();

      // 100 answered clicks plus the initial state
      expect(store.statesApplied).toBe(TARGET_CLICKS + 1);
      // keys never moved
      expect(positionViolations).toEqual([]);
      // every accepted input became exactly one CLICK, no auto-clicks:
      // the server's step counter counts the clicks it received
      expect(gate.clicksSent).toBe(TARGET_CLICKS);
      expect(gate.pressesAccepted).toBe(TARGET_CLICKS);
      expect(store.step).toBe(TARGET_CLICKS);
      // the text display equals the last STATE's text
      expect(store.snapshot().typed).toBe(lastStateTyped);
      console.log(
        `UI CONFORMANCE: PASS (states=${store.statesApplied}, ` +
        `clicks=${gate.clicksSent}, typed=${JSON.stringify(store.snapshot().typed)})`);
    }, 60_000);
});
