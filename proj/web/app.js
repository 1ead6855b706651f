// Browser client for the play service: one human at seat 0, bots elsewhere.
"use strict";

const SEAT = 0;
let session = null;
let step = 0;
let eventStep = 0;

const $ = (id) => document.getElementById(id);

async function call(method, path, body) {
  const res = await fetch(path, {
    method,
    headers: body ? { "Content-Type": "application/json" } : {},
    body: body ? JSON.stringify(body) : undefined,
  });
  const data = await res.json();
  if (!res.ok) {
    const e = data.error || {};
    throw new Error(`${e.code}: ${e.message}`);
  }
  return data;
}

function showError(e) {
  $("error").textContent = e ? String(e.message || e) : "";
}

function render(view) {
  step = view.step;
  const s = view.state;
  $("session").textContent = view.session;
  $("game").textContent = view.game;
  $("status").textContent = view.status;
  $("step").textContent = view.step;
  $("hole").textContent = (s.hole[SEAT] || []).join(" ") || "-";
  $("community").textContent = s.community.join(" ") || "-";
  $("stacks").textContent = s.stacks.join(" / ");
  $("pots").textContent = s.pots.map((p) => p.amount).join(" + ") || "0";
  $("state").textContent = view.state_text;
  $("turn").textContent = view.status === "finished" ? "Round over." : view.your_turn ? "Your turn." : "Waiting...";
  const actions = $("actions");
  actions.replaceChildren();
  if (view.your_turn) {
    for (const a of view.legal_actions) {
      const b = document.createElement("button");
      b.textContent = a;
      b.onclick = () => act(a);
      actions.appendChild(b);
    }
  }
}

async function act(action) {
  showError(null);
  try {
    render(await call("POST", `/sessions/${session}/actions`, { seat: SEAT, action }));
  } catch (e) {
    showError(e);
  }
}

async function pollEvents() {
  while (session) {
    try {
      const r = await call("GET", `/sessions/${session}/events?seat=${SEAT}&after=${eventStep}&wait_ms=20000`);
      for (const e of r.events) {
        const msgs = e.messages.map((m) => m.text).join("; ");
        $("events").textContent += `${e.step} ${e.category} ${e.input}${msgs ? "  (" + msgs + ")" : ""}\n`;
      }
      eventStep = r.step;
      const view = await call("GET", `/sessions/${session}/view?seat=${SEAT}`);
      render(view);
      if (view.status === "finished" && r.events.length === 0) return;
    } catch (e) {
      showError(e);
      return;
    }
  }
}

async function start() {
  showError(null);
  try {
    const created = await call("POST", "/sessions", { preset: $("preset").value, seed: Number($("seed").value) });
    session = created.id;
    step = 0;
    eventStep = 0;
    $("events").textContent = "";
    for (let seat = 1; seat < created.players; ++seat) {
      await call("POST", `/sessions/${session}/bots`, { seat, seed: seat });
    }
    render(await call("POST", `/sessions/${session}/join`, { seat: SEAT }));
    $("table").hidden = false;
    pollEvents();
  } catch (e) {
    showError(e);
  }
}

async function init() {
  try {
    const presets = await call("GET", "/presets");
    for (const p of presets) {
      const o = document.createElement("option");
      o.value = p.name;
      o.textContent = p.game;
      $("preset").appendChild(o);
    }
  } catch (e) {
    showError(e);
  }
  $("start").onclick = start;
}

init();
