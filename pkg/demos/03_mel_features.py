"""
From waveform to network input
==============================

The predictor never sees audio directly. It sees blocks of a mel
spectrogram: 128 log-compressed bands per STFT frame, 40 consecutive
frames concatenated into one 5120-dimensional vector, one vector every
10 frames. This script walks a clip through each stage and shows where
the numbers land on the time axis.
"""

import numpy as np

from blindsar import (AudioClip, FeatureConfig, extract_features, hz_to_mel,
                      mel_filterbank, mel_spectrogram, mel_to_hz,
                      stack_frames, stft_magnitude)

rate = 44100
dur = 4.0
rng = np.random.default_rng(5)
t = np.arange(int(dur * rate)) / rate

# a chirp sweeping 200 Hz -> 4 kHz, so energy visibly moves across bands
freq = 200.0 * (20.0 ** (t / dur))
chirp = 0.4 * np.sin(2 * np.pi * np.cumsum(freq) / rate)
clip = AudioClip(chirp[None, :] + 0.01 * rng.standard_normal((1, t.size)), rate)

# the mel scale: equal steps sound equally far apart
for f in (440.0, 1000.0, 4000.0):
    print(f"  {f:6.0f} Hz -> {hz_to_mel(f):7.1f} mel -> "
          f"{mel_to_hz(hz_to_mel(f)):6.0f} Hz back")

cfg = FeatureConfig()
spec = stft_magnitude(clip, cfg.frame_len, cfg.hop, cfg.window)
print(f"STFT: {spec.magnitudes.shape[0]} frames x "
      f"{spec.magnitudes.shape[1]} bins "
      f"({cfg.frame_len}-sample frames every {cfg.hop})")

fb = mel_filterbank(rate, cfg.frame_len, cfg.n_mels)
print(f"filterbank: {fb.weights.shape[0]} triangular bands over "
      f"{fb.weights.shape[1]} bins")

mfs = mel_spectrogram(spec, fb, cfg.compression)
peak_band = np.argmax(mfs.features, axis=1)
print("chirp ridge (band of max energy every 40 frames):",
      peak_band[::40].tolist())

vectors = stack_frames(mfs, cfg.n_stack, cfg.stride)
print(f"stacked: {len(vectors)} vectors of {vectors[0].values.size} values")
print("anchor times (s):",
      [round(v.anchor_time, 3) for v in vectors[:5]], "...")

# extract_features wraps the whole chain
same = extract_features(clip, cfg)
assert len(same) == len(vectors)
assert np.array_equal(same[0].values, vectors[0].values)
print("extract_features reproduces the manual chain")
