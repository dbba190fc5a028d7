"""
Tracking SAR over time
======================

One number per track hides a lot. A separator that is clean for the
verse and falls apart in the chorus averages out to "fine". Here we
fabricate exactly that situation: the artifact level ramps up over an
eight second clip, and the sliding-window SAR curve shows the decay
that a single full-length score would blur away.
"""

import os

import numpy as np

from blindsar import AudioClip, ProjectionConfig, framewise_sar
from blindsar.svg import write_line_chart

OUT = os.path.join(os.path.dirname(__file__), "_out")
os.makedirs(OUT, exist_ok=True)

rng = np.random.default_rng(3)
rate = 8000
dur = 8.0
n = int(dur * rate)

# reference: band-limited noise standing in for a vocal stem
ref = np.convolve(rng.standard_normal(n + 4), np.ones(5) / 5.0, "valid")

# estimate: reference plus junk that grows from -40 dB to roughly -5 dB
ramp = 10.0 ** (np.linspace(-40.0, -5.0, n) / 20.0)
est = ref + ramp * np.std(ref) * rng.standard_normal(n)

series = framewise_sar(AudioClip(est[None, :], rate),
                       [AudioClip(ref[None, :], rate)],
                       target_index=0,
                       cfg=ProjectionConfig(filter_len=16))

times = series.times()
print(f"{series.frames} windows of 464 ms every 117 ms")
for i in range(0, series.frames, 8):
    bar = "#" * max(0, int((series.values[i] + 30) / 2))
    print(f"  t={times[i]:5.2f} s  SAR={series.values[i]:7.2f} dB  {bar}")

csv_path = os.path.join(OUT, "sar_ramp.csv")
series.to_csv(csv_path)
print(f"wrote {csv_path}")

svg_path = os.path.join(OUT, "sar_ramp.svg")
write_line_chart(svg_path, [("SAR", times, series.values)],
                 title="SAR under a rising artifact floor",
                 x_label="time (s)", y_label="SAR (dB)")
print(f"wrote {svg_path}")
