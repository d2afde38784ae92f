import { App } from "./app.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

const scheme = location.protocol === "https:" ? "wss" : "ws";
new App(root, `${scheme}://${location.host}/ws`);
