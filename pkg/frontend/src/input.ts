// Turns physical inputs into CLICK messages with a depth-one buffer:
// at most one unacknowledged CLICK is in flight; one more press may wait
// in the buffer; anything beyond that is dropped with feedback. Inputs
// while disconnected are rejected, never silently swallowed.

import { Color } from "./protocol.js";

export type PressOutcome = "sent" | "buffered" | "dropped" | "rejected";

export class InputGate {
  private send: (color: Color) => void;
  private notify: (outcome: PressOutcome, color: Color) => void;
  private inFlight = false;
  private buffered: Color | null = null;

  connected = false;
  clicksSent = 0;
  pressesAccepted = 0;

  constructor(
    send: (color: Color) => void,
    notify: (outcome: PressOutcome, color: Color) => void = () => undefined,
  ) {
    this.send = send;
    this.notify = notify;
  }

  press(color: Color): PressOutcome {
    let outcome: PressOutcome;
    if (!this.connected) {
      outcome = "rejected";
    } else if (!this.inFlight) {
      this.inFlight = true;
      this.clicksSent += 1;
      this.pressesAccepted += 1;
      this.send(color);
      outcome = "sent";
    } else if (this.buffered === null) {
      this.buffered = color;
      this.pressesAccepted += 1;
      outcome = "buffered";
    } else {
      outcome = "dropped";
    }
    this.notify(outcome, color);
    return outcome;
  }

  /** Call when the STATE answering the in-flight CLICK arrives. */
  acknowledge(): void {
    this.inFlight = false;
    if (this.buffered !== null) {
      const color = this.buffered;
      this.buffered = null;
      this.inFlight = true;
      this.clicksSent += 1;
      this.send(color);
    }
  }

  /** Connection dropped: the buffer empties and pending flight is void. */
  reset(): void {
    this.inFlight = false;
    this.buffered = null;
  }
}
