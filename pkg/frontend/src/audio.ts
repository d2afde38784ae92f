// Audible cue for key selections: a short soft blip via WebAudio.

let ctx: AudioContext | null = null;

export function selectionCue(): void {
  try {
    if (ctx === null) {
      ctx = new AudioContext();
    }
    const osc = ctx.createOscillator();
    const gain = ctx.createGain();
    osc.frequency.value = 880;
    gain.gain.setValueAtTime(0.12, ctx.currentTime);
    gain.gain.exponentialRampToValueAtTime(0.0001, ctx.currentTime + 0.08);
    osc.connect(gain).connect(ctx.destination);
    osc.start();
    osc.stop(ctx.currentTime + 0.09);
  } catch {
    // audio is best effort; never let it break input handling
  }
}
