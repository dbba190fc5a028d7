"""
The whole loop, miniature edition
=================================

Synthesize a corpus of fake separator outputs with known references,
label each output with framewise SAR, train the regressor on the train
songs, then predict SAR for held-out songs from their audio alone and
compare against the measured truth. Everything is scaled down so the
script finishes in well under a minute; the shape of the pipeline is
exactly the production one.
"""

import os
import time

import numpy as np

from blindsar import (FeatureConfig, MetricConfig, ProjectionConfig,
                      PredictionRecord, TrainConfig, build_corpus,
                      build_examples, build_report, examples_to_arrays,
                      forward, init_mlp, make_scenarios, scenario_entries,
                      train)

OUT = os.path.join(os.path.dirname(__file__), "_out", "tiny_run")
t0 = time.time()

# 1. corpus: 6 songs, 3 pseudo-separators of very different quality,
#    5 songs for training
manifest_path, entries = build_corpus(os.path.join(OUT, "corpus"),
                                      n_songs=6, duration=6.0,
                                      sample_rate=44100, n_algorithms=3,
                                      train_count=5, seed=0)
print(f"corpus: {len(entries)} estimate tracks under {OUT}")

# 2. scenario: pool every algorithm, hold out whole songs
scenario = make_scenarios("across-known", entries, seed=0)[0]
train_entries, test_entries = scenario_entries(scenario, entries)
print(f"scenario {scenario.name}: {len(train_entries)} train tracks, "
      f"{len(test_entries)} test tracks")

# 3. labels: framewise SAR against the references (short filter for speed)
feature_cfg = FeatureConfig()
metric_cfg = MetricConfig(projection=ProjectionConfig(filter_len=16))
train_examples = []
for e in train_entries:
    train_examples.extend(build_examples(e, feature_cfg, metric_cfg))
labels = np.array([x.label for x in train_examples])
print(f"labeled {len(train_examples)} training frames, "
      f"SAR range [{labels.min():.1f}, {labels.max():.1f}] dB")

# 4. train a small regressor on feature vectors alone
X, y = examples_to_arrays(train_examples, dtype=np.float32)
model = init_mlp((5120, 64, 1), seed=0, dtype=np.float32)
best, history = train(model, X, y,
                      TrainConfig(max_epochs=40, batch_size=32, seed=0))
print(f"trained {len(history)} epochs, "
      f"best val MSE {min(h['val_mse'] for h in history):.3f}")

# 5. predict the held-out song without touching its references,
#    then report against the measured labels
records = []
for e in test_entries:
    examples = build_examples(e, feature_cfg, metric_cfg)
    Xt, _ = examples_to_arrays(examples, dtype=np.float32)
    preds = np.atleast_1d(forward(best, Xt))
    records.extend(
        PredictionRecord(e.song_id, e.algorithm_id, x.time, float(p), x.label)
        for x, p in zip(examples, preds))

report = build_report(records, scenario.name, seed=0)
g = report.global_row
print(f"held-out MAE {g.mae_db:.2f} dB over {g.frame_count} frames, "
      f"mean per-song r "
      f"{'n/a' if g.mean_pearson_r is None else round(g.mean_pearson_r, 3)}")
print(f"total {time.time() - t0:.1f} s")
