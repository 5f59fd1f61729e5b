import init, { ladder, filling, laughlin_grid } from "./pkg/qhe_cyclic_web.js";

const $ = (id) => document.getElementById(id);

function show(el, fn) {
  try {
    el.textContent = fn();
    el.className = "";
  } catch (e) {
    el.textContent = String(e);
    el.className = "bad";
  }
}

function runLadder() {
  show($("ladder-out"), () => {
    const base = $("base").value.trim() === "" ? NaN : Number($("base").value);
    const r = JSON.parse(ladder(Number($("p").value), Number($("k").value), base));
    return [
      `|a_i|^2      ${r.magnitudes.map((x) => x.toPrecision(6)).join("  ")}`,
      `base         ${r.base}   (must exceed ${r.infimum_base})`,
      `commutator   ${r.relations.commutator_residual}`,
      `K E+ K^-1    q^${r.relations.detected_conjugation_sign} E+`,
      `E+^N scalar  ${r.cyclicity.epow_scalar.join(" + i·")}`,
      `relations    ${r.relations.pass ? "pass" : "FAIL"}, cyclic ${r.cyclicity.is_cyclic}`,
    ].join("\n");
  });
}

function runFilling() {
  show($("nu-out"), () => {
    const r = JSON.parse(filling($("nu").value));
    return [
      `standard   [${r.standard.join(", ")}]`,
      `plus-sign  [${r.positive.join(", ")}]`,
      `theta      ${r.thetas.join("  ")}`,
      `q          ${r.qs.join("  ")}`,
      `basis      ${r.index ? `i = ${r.index[0]}, p = ${r.index[1]}` : "pick a family"}`,
    ].join("\n");
  });
}

const EXTENT = 3;
let z2 = [0.5, 0];

function drawDensity() {
  const canvas = $("plot");
  const n = canvas.width;
  const grid = laughlin_grid(Number($("m").value), z2[0], z2[1], n, EXTENT);
  const max = grid.reduce((a, b) => Math.max(a, b), 0) || 1;
  const ctx = canvas.getContext("2d");
  const img = ctx.createImageData(n, n);
  grid.forEach((v, i) => {
    const t = Math.sqrt(v / max);
    img.data.set([255 * t, 80 * t, 255 * (1 - t), 255], 4 * i);
  });
  ctx.putImageData(img, 0, 0);
  const px = ((z2[0] + EXTENT) / (2 * EXTENT)) * (n - 1);
  const py = ((EXTENT - z2[1]) / (2 * EXTENT)) * (n - 1);
  ctx.fillStyle = "white";
  ctx.fillRect(px - 1, py - 1, 3, 3);
}

await init();
$("ladder-go").onclick = runLadder;
$("nu-go").onclick = runFilling;
$("m").onchange = drawDensity;
$("plot").onclick = (ev) => {
  const rect = ev.target.getBoundingClientRect();
  z2 = [
    ((ev.clientX - rect.left) / rect.width) * 2 * EXTENT - EXTENT,
    EXTENT - ((ev.clientY - rect.top) / rect.height) * 2 * EXTENT,
  ];
  drawDensity();
};
runLadder();
runFilling();
drawDensity();
