"""
Driving the toolkit from the command line
=========================================

Every pipeline stage is also a subcommand, so a full experiment is a
handful of shell lines. This script runs those lines in-process (the
`blindsar` console entry point calls the same `main`) and then pokes at
the provenance sidecars each stage leaves next to its outputs.
"""

import json
import os
import shutil

from blindsar.cli import main

OUT = os.path.join(os.path.dirname(__file__), "_out", "cli_run")
shutil.rmtree(OUT, ignore_errors=True)
os.makedirs(OUT)

FAST = ["--set", "metric.projection.filter_len=16"]
SMALL = ["--set", "layer_dims=5120,64,1", "--set", "train.batch_size=32",
         "--set", "train.max_epochs=40"]

corpus = os.path.join(OUT, "corpus")
manifest = os.path.join(corpus, "manifest.json")
model = os.path.join(OUT, "model.mlpr")
cache = os.path.join(OUT, "cache")
report = os.path.join(OUT, "report.csv")

steps = [
    ["synth", "--out", corpus, "--songs", "6", "--duration", "6.0",
     "--algorithms", "3", "--train-songs", "5", "--seed", "1"],
    ["train", "--manifest", manifest, "--scenario", "across-known",
     "--out", model, "--cache", cache, *FAST, *SMALL],
    ["evaluate", "--manifest", manifest, "--model", model,
     "--scenario", "across-known", "--out", report,
     "--pred-dir", os.path.join(OUT, "preds"),
     "--svg-dir", os.path.join(OUT, "charts"),
     "--cache", cache, *FAST, *SMALL],
]
for argv in steps:
    print(f"$ blindsar {' '.join(argv)}")
    rc = main(argv)
    assert rc == 0, f"exit code {rc}"
    print()

print("report.csv:")
for line in open(report).read().strip().splitlines():
    print(f"  {line}")

# each output carries a sidecar: the exact resolved config, a digest of
# it, the seeds, and digests of every input file
with open(model + ".meta.json") as fh:
    meta = json.load(fh)
print(f"\nmodel sidecar: command={meta['command']} "
      f"config_digest={meta['config_digest'][:12]}... "
      f"epochs={meta['epochs']}")
print(f"training consumed: {list(meta['inputs'])}")

# a second training run with the same seeds writes the same bytes
model2 = os.path.join(OUT, "model2.mlpr")
main(["train", "--manifest", manifest, "--scenario", "across-known",
      "--out", model2, "--cache", cache, *FAST, *SMALL])
same = open(model, "rb").read() == open(model2, "rb").read()
print(f"\nretrained weights byte-identical: {same}")
