// Input mapping, persisted locally. Storage is injectable so the logic
// runs under node tests without a DOM.

import { Color } from "./protocol.js";

export interface Settings {
  leftKey: string;
  rightKey: string;
  leftColor: Color;
  rightColor: Color;
}

export const DEFAULT_SETTINGS: Settings = {
  leftKey: "f",
  rightKey: "j",
  leftColor: "RED",
  rightColor: "BLUE",
};

type StorageLike = Pick<Storage, "getItem" | "setItem">;

const STORAGE_KEY = "colorkeys.settings";

export class SettingsStore {
  private storage: StorageLike | null;
  settings: Settings;

  constructor(storage: StorageLike | null = null) {
    this.storage = storage;
    this.settings = { ...DEFAULT_SETTINGS };
    this.load();
  }

  private load(): void {
    if (!this.storage) return;
    const raw = this.storage.getItem(STORAGE_KEY);
    if (!raw) return;
    try {
      const parsed = JSON.parse(raw) as Partial<Settings>;
      this.settings = { ...DEFAULT_SETTINGS, ...parsed };
    } catch {
      // corrupted settings fall back to defaults
    }
  }

  private save(): void {
    this.storage?.setItem(STORAGE_KEY, JSON.stringify(this.settings));
  }

  swapColors(): void {
    const { leftColor, rightColor } = this.settings;
    this.settings.leftColor = rightColor;
    this.settings.rightColor = leftColor;
    this.save();
  }

  setKeys(leftKey: string, rightKey: string): void {
    this.settings.leftKey = leftKey;
    this.settings.rightKey = rightKey;
    this.save();
  }

  colorForKey(key: string): Color | null {
    if (key === this.settings.leftKey) return this.settings.leftColor;
    if (key === this.settings.rightKey) return this.settings.rightColor;
    return null;
  }
}
