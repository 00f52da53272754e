// Canvas front end for the ionization-rate demo. No framework; the wasm
// module does the physics, this file only draws.

import init, {
  field_info,
  spectrum,
  phase_curve,
  parallel_cut,
  cutoff_energy_up,
} from "./pkg/sfi_wasm.js";

const els = {
  intensity: document.getElementById("intensity"),
  wavelength: document.getElementById("wavelength"),
  ip: document.getElementById("ip"),
  intensityOut: document.getElementById("intensity-out"),
  wavelengthOut: document.getElementById("wavelength-out"),
  ipOut: document.getElementById("ip-out"),
  info: document.getElementById("info"),
  spectrum: document.getElementById("spectrum"),
  phase: document.getElementById("phase"),
  cut: document.getElementById("cut"),
};

const SPEC_NPAR = 161;
const SPEC_NPERP = 81;
const SPEC_KSCALE = 1.5;
const PHASE_N = 241;
const PHASE_OFFSETS = [0.0, 0.25, 0.5, 0.75]; // in units of sqrt(2 Ip)
const CURVE_COLORS = ["#5ec8f8", "#ffc857", "#f76f8e", "#7bd88f"];
const CUT_N = 301;
const CUT_EMAX_UP = 6.0;

function params() {
  return {
    intensity: Math.pow(10, parseFloat(els.intensity.value)),
    wavelength: parseFloat(els.wavelength.value),
    ip: parseFloat(els.ip.value),
  };
}

function fmt(x, digits = 3) {
  if (!isFinite(x)) return "–";
  const a = Math.abs(x);
  return a !== 0 && (a < 1e-2 || a >= 1e4) ? x.toExponential(digits) : x.toPrecision(digits + 1);
}

// dark-friendly sequential colormap (deep blue -> cyan -> yellow)
function colormap(t) {
  const s = Math.min(1, Math.max(0, t));
  const stops = [
    [13, 8, 32], [43, 27, 90], [60, 60, 150], [46, 119, 184],
    [53, 174, 170], [122, 216, 118], [219, 231, 83], [252, 250, 211],
  ];
  const x = s * (stops.length - 1);
  const i = Math.min(stops.length - 2, Math.floor(x));
  const f = x - i;
  const c = stops[i].map((v, j) => Math.round(v + f * (stops[i + 1][j] - v)));
  return c;
}

function clearCanvas(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  return ctx;
}

function axisLabel(ctx, text, x, y, angle = 0) {
  ctx.save();
  ctx.translate(x, y);
  if (angle) ctx.rotate(angle);
  ctx.fillStyle = "#93a0b4";
  ctx.font = "13px system-ui";
  ctx.textAlign = "center";
  ctx.fillText(text, 0, 0);
  ctx.restore();
}

function drawSpectrum(p) {
  const values = spectrum(p.wavelength, p.intensity, p.ip, SPEC_NPAR, SPEC_NPERP, SPEC_KSCALE);
  const canvas = els.spectrum;
  const ctx = clearCanvas(canvas);
  const margin = { left: 56, right: 88, top: 14, bottom: 44 };
  const W = canvas.width - margin.left - margin.right;
  const H = canvas.height - margin.top - margin.bottom;

  const floor = -30; // displayed dynamic range in ln units
  const img = ctx.createImageData(SPEC_NPAR, 2 * SPEC_NPERP - 1);
  for (let i = 0; i < SPEC_NPAR; i++) {
    for (let j = 0; j < SPEC_NPERP; j++) {
      const v = values[i * SPEC_NPERP + j];
      const t = 1 - Math.min(1, Math.max(0, v / floor));
      const [r, g, b] = colormap(t);
      // mirror the k_perp >= 0 half-plane about the horizontal axis
      for (const row of [SPEC_NPERP - 1 - j, SPEC_NPERP - 1 + j]) {
        const idx = 4 * (row * SPEC_NPAR + i);
        img.data[idx] = r;
        img.data[idx + 1] = g;
        img.data[idx + 2] = b;
        img.data[idx + 3] = 255;
      }
    }
  }
  const off = new OffscreenCanvas(SPEC_NPAR, 2 * SPEC_NPERP - 1);
  off.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = true;
  ctx.drawImage(off, margin.left, margin.top, W, H);

  // axes
  ctx.strokeStyle = "#93a0b4";
  ctx.strokeRect(margin.left, margin.top, W, H);
  ctx.fillStyle = "#93a0b4";
  ctx.font = "12px system-ui";
  ctx.textAlign = "center";
  for (const kx of [-1.5, -1, -0.5, 0, 0.5, 1, 1.5]) {
    const x = margin.left + ((kx / SPEC_KSCALE + 1) / 2) * W;
    ctx.fillText(kx.toFixed(1), x, margin.top + H + 16);
  }
  axisLabel(ctx, "k∥ / √(2Ip)", margin.left + W / 2, canvas.height - 8);
  axisLabel(ctx, "k⊥ / √(2Ip)", 16, margin.top + H / 2, -Math.PI / 2);

  // color legend
  const lx = margin.left + W + 24;
  for (let y = 0; y < H; y++) {
    const [r, g, b] = colormap(1 - y / H);
    ctx.fillStyle = `rgb(${r},${g},${b})`;
    ctx.fillRect(lx, margin.top + y, 16, 1.5);
  }
  ctx.fillStyle = "#93a0b4";
  ctx.textAlign = "left";
  ctx.fillText("0", lx + 22, margin.top + 10);
  ctx.fillText(`${floor}`, lx + 22, margin.top + H);
  axisLabel(ctx, "ln Γ/Γmax", lx + 8, margin.top - 2);
}

function drawCurvePlot(canvas, series, opts) {
  const ctx = clearCanvas(canvas);
  const margin = { left: 54, right: 12, top: 14, bottom: 44 };
  const W = canvas.width - margin.left - margin.right;
  const H = canvas.height - margin.top - margin.bottom;
  const { xMin, xMax, yMin, yMax } = opts;
  const sx = (x) => margin.left + ((x - xMin) / (xMax - xMin)) * W;
  const sy = (y) => margin.top + ((yMax - y) / (yMax - yMin)) * H;

  ctx.strokeStyle = "#3a4354";
  ctx.lineWidth = 1;
  for (const gy of opts.yTicks) {
    ctx.beginPath();
    ctx.moveTo(sx(xMin), sy(gy));
    ctx.lineTo(sx(xMax), sy(gy));
    ctx.stroke();
    ctx.fillStyle = "#93a0b4";
    ctx.font = "12px system-ui";
    ctx.textAlign = "right";
    ctx.fillText(String(gy), margin.left - 6, sy(gy) + 4);
  }
  for (const gx of opts.xTicks) {
    ctx.fillStyle = "#93a0b4";
    ctx.textAlign = "center";
    ctx.fillText(opts.xTickLabel ? opts.xTickLabel(gx) : String(gx), sx(gx), margin.top + H + 16);
  }
  ctx.strokeStyle = "#93a0b4";
  ctx.strokeRect(margin.left, margin.top, W, H);

  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.lineWidth = 2;
    if (s.dash) ctx.setLineDash(s.dash);
    ctx.beginPath();
    let started = false;
    for (const [x, y] of s.points) {
      const cy = Math.max(yMin, y);
      if (!started) {
        ctx.moveTo(sx(x), sy(cy));
        started = true;
      } else {
        ctx.lineTo(sx(x), sy(cy));
      }
    }
    ctx.stroke();
    ctx.setLineDash([]);
  }

  if (opts.marker) {
    const [mx, my] = opts.marker;
    ctx.fillStyle = "#ffffff";
    ctx.beginPath();
    ctx.arc(sx(mx), sy(Math.max(yMin, my)), 4.5, 0, 2 * Math.PI);
    ctx.fill();
  }

  axisLabel(ctx, opts.xLabel, margin.left + W / 2, canvas.height - 8);
  axisLabel(ctx, opts.yLabel, 14, margin.top + H / 2, -Math.PI / 2);

  if (opts.legend) {
    ctx.font = "12px system-ui";
    ctx.textAlign = "left";
    opts.legend.forEach((entry, i) => {
      ctx.fillStyle = entry.color;
      ctx.fillRect(margin.left + 10, margin.top + 10 + 16 * i, 14, 3);
      ctx.fillStyle = "#e8ebf0";
      ctx.fillText(entry.label, margin.left + 30, margin.top + 16 + 16 * i);
    });
  }
}

function drawPhase(p, info) {
  const series = PHASE_OFFSETS.map((frac, i) => {
    const k = frac * info.k_scale;
    const values = phase_curve(p.wavelength, p.intensity, p.ip, k, PHASE_N);
    const points = Array.from(values, (v, j) => [
      -Math.PI / 2 + (Math.PI * j) / (PHASE_N - 1),
      v,
    ]);
    return { color: CURVE_COLORS[i], points };
  });
  drawCurvePlot(els.phase, series, {
    xMin: -Math.PI / 2,
    xMax: Math.PI / 2,
    yMin: -25,
    yMax: 0.5,
    xTicks: [-Math.PI / 2, -Math.PI / 4, 0, Math.PI / 4, Math.PI / 2],
    xTickLabel: (x) => (x === 0 ? "0" : (x > 0 ? "" : "-") + (Math.abs(x) > 1 ? "π/2" : "π/4")),
    yTicks: [0, -5, -10, -15, -20, -25],
    xLabel: "laser phase φ",
    yLabel: "ln Γ (rel. peak)",
    legend: PHASE_OFFSETS.map((f, i) => ({ color: CURVE_COLORS[i], label: `k = ${f.toFixed(2)}` })),
  });
}

function drawCut(p) {
  const flat = parallel_cut(p.wavelength, p.intensity, p.ip, CUT_N, CUT_EMAX_UP);
  const points = [];
  for (let i = 0; i < flat.length; i += 2) points.push([flat[i], flat[i + 1]]);
  const knee = cutoff_energy_up(p.wavelength, p.intensity, p.ip);
  const kneeY = isFinite(knee)
    ? points.reduce((best, pt) => (Math.abs(pt[0] - knee) < Math.abs(best[0] - knee) ? pt : best))[1]
    : NaN;
  const yMin = -60;
  const series = [
    { color: "#5ec8f8", points },
    {
      color: "#93a0b4",
      dash: [6, 5],
      points: [
        [2, 0.5],
        [2, yMin],
      ],
    },
  ];
  drawCurvePlot(els.cut, series, {
    xMin: 0,
    xMax: CUT_EMAX_UP,
    yMin,
    yMax: 0.5,
    xTicks: [0, 1, 2, 3, 4, 5, 6],
    yTicks: [0, -15, -30, -45, -60],
    xLabel: "kinetic energy E / Up",
    yLabel: "ln Γ(k,0)/Γ(0,0)",
    marker: isFinite(knee) ? [knee, kneeY] : null,
  });
}

function regimeLabel(gamma) {
  if (gamma <= 0.5) return "tunneling";
  if (gamma < 2) return "intermediate";
  return "multiphoton";
}

function redraw() {
  const p = params();
  els.intensityOut.textContent = p.intensity.toExponential(2);
  els.wavelengthOut.textContent = p.wavelength.toFixed(0);
  els.ipOut.textContent = p.ip.toFixed(2);

  const info = JSON.parse(field_info(p.wavelength, p.intensity, p.ip));
  els.info.innerHTML =
    `γ = <b>${fmt(info.gamma)}</b> (${regimeLabel(info.gamma)})` +
    ` <span>F = <b>${fmt(info.f0_au)}</b> a.u.</span>` +
    ` <span>ω = <b>${fmt(info.omega_au)}</b> a.u.</span>` +
    ` <span>Up = <b>${fmt(info.up_au)}</b> a.u.</span>` +
    ` <span>2Up = <b>${fmt(info.two_up_au)}</b> a.u.</span>` +
    ` <span>ln Γ(0,0) = <b>${fmt(info.log_rate_origin)}</b></span>`;

  drawSpectrum(p);
  drawPhase(p, info);
  drawCut(p);
}

let pending = false;
function scheduleRedraw() {
  if (pending) return;
  pending = true;
  requestAnimationFrame(() => {
    pending = false;
    redraw();
  });
}

async function main() {
  await init();
  for (const el of [els.intensity, els.wavelength, els.ip]) {
    el.addEventListener("input", scheduleRedraw);
  }
  redraw();
}

main().catch((e) => {
  els.info.textContent = `failed to load wasm module: ${e}`;
});
