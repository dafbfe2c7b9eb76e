import init, { Simulation, ruleSummary, tilingClass } from "./pkg/symca_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("view");
const ctx = canvas.getContext("2d");

let sim = null;
let edges = new Uint32Array();
let points = new Float64Array();
let yaw = 0.4;
let pitch = 0.3;
let timer = null;
let drag = null;

function report(el, err) {
  el.textContent = String(err.message ?? err);
  el.className = "err";
}

function toScreen(i) {
  const pad = 14;
  const r = canvas.width / 2 - pad;
  return [canvas.width / 2 + points[3 * i] * r, canvas.height / 2 - points[3 * i + 1] * r];
}

function draw() {
  if (!sim) return;
  points = sim.points(yaw, pitch);
  const cells = sim.cells();
  const rim = sim.boundary();
  const n = sim.cellCount();
  const dot = Math.max(1.5, Math.min(9, 220 / Math.sqrt(n)));
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#ddd";
  ctx.lineWidth = 1;
  ctx.beginPath();
  for (let e = 0; e < edges.length; e += 2) {
    const [ax, ay] = toScreen(edges[e]);
    const [bx, by] = toScreen(edges[e + 1]);
    ctx.moveTo(ax, ay);
    ctx.lineTo(bx, by);
  }
  ctx.stroke();
  const order = [...Array(n).keys()].sort((a, b) => points[3 * a + 2] - points[3 * b + 2]);
  for (const i of order) {
    const [x, y] = toScreen(i);
    const back = points[3 * i + 2] < 0;
    ctx.globalAlpha = back ? 0.35 : 1;
    ctx.fillStyle = cells[i] ? "#1a4fa0" : "#fff";
    ctx.strokeStyle = rim[i] ? "#c33" : "#999";
    ctx.beginPath();
    ctx.arc(x, y, dot, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
  }
  ctx.globalAlpha = 1;
  $("status").className = "";
  $("status").textContent = `${sim.describe()}. Generation ${sim.generation()}, ${sim.population()} live.`;
}

function build() {
  stop();
  try {
    sim?.free();
    sim = null;
    sim = new Simulation(
      $("rule").value,
      $("lattice").value,
      +$("width").value,
      +$("height").value,
      +$("layers").value,
      +$("density").value,
      BigInt($("seed").value || 0),
    );
    edges = sim.edges();
    draw();
  } catch (e) {
    report($("status"), e);
  }
}

function advance() {
  try {
    sim.step(1);
    draw();
  } catch (e) {
    stop();
    report($("status"), e);
  }
}

function stop() {
  clearInterval(timer);
  timer = null;
  $("play").textContent = "Play";
}

function nearestCell(mx, my) {
  let best = -1;
  let bestD = Infinity;
  for (let i = 0; i < sim.cellCount(); i++) {
    if (points[3 * i + 2] < 0) continue;
    const [x, y] = toScreen(i);
    const d = (x - mx) ** 2 + (y - my) ** 2;
    if (d < bestD) [best, bestD] = [i, d];
  }
  return best;
}

canvas.addEventListener("mousedown", (ev) => {
  drag = { x: ev.offsetX, y: ev.offsetY, moved: false };
});
canvas.addEventListener("mousemove", (ev) => {
  if (!drag || !sim) return;
  const dx = ev.offsetX - drag.x;
  const dy = ev.offsetY - drag.y;
  if (Math.abs(dx) + Math.abs(dy) > 3) drag.moved = true;
  if (drag.moved) {
    yaw += dx * 0.01;
    pitch += dy * 0.01;
    drag.x = ev.offsetX;
    drag.y = ev.offsetY;
    draw();
  }
});
canvas.addEventListener("mouseup", (ev) => {
  if (sim && drag && !drag.moved) {
    const i = nearestCell(ev.offsetX, ev.offsetY);
    if (i >= 0) {
      sim.toggle(i);
      draw();
    }
  }
  drag = null;
});

$("build").onclick = build;
$("lattice").onchange = build;
$("step").onclick = () => sim && advance();
$("play").onclick = () => {
  if (!sim) return;
  if (timer) return stop();
  timer = setInterval(advance, 80);
  $("play").textContent = "Pause";
};
$("clear").onclick = () => {
  sim?.clear();
  draw();
};
$("cycle").onclick = () => {
  if (!sim) return;
  try {
    const c = sim.cycle(2000);
    $("status").textContent = c.length
      ? `Enters a cycle of period ${c[1]} after ${c[0]} steps.`
      : "No repeated state within 2000 steps.";
  } catch (e) {
    report($("status"), e);
  }
};
$("inspect").onclick = () => {
  try {
    $("summary").className = "";
    $("summary").textContent = JSON.stringify(JSON.parse(ruleSummary($("irule").value, +$("ik").value)), null, 2);
  } catch (e) {
    report($("summary"), e);
  }
};
$("classify").onclick = () => {
  try {
    $("tclass").className = "";
    $("tclass").textContent = tilingClass(+$("tp").value, +$("tk").value);
  } catch (e) {
    report($("tclass"), e);
  }
};

await init();
build();
$("inspect").onclick();
$("classify").onclick();
