#!/usr/bin/env python3
"""The same pipeline through the batch CLI: generate, infer, evaluate,
analyze-errors.  Everything lands in ./cli_demo_output."""

import os
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "cli_demo_output")


def run(*args):
    cmd = [sys.executable, "-m", "grnlars.cli", *args]
    print("$ grnlars", " ".join(args))
    subprocess.run(cmd, check=True)
    print()


run("generate", "--genes", "25", "--tfs", "5", "--samples", "60", "--edges", "20",
    "--noise-sd", "0.5", "--seed", "4", "--output-dir", OUT)

run("infer",
    "--expression", os.path.join(OUT, "expression.tsv"),
    "--tf-list", os.path.join(OUT, "tf_list.txt"),
    "--output", os.path.join(OUT, "edges.tsv"),
    "--runs", "1000", "--steps", "2", "--alpha", "0.4", "--seed", "0",
    "--threads", "2")

run("evaluate",
    "--predictions", os.path.join(OUT, "edges.tsv"),
    "--gold", os.path.join(OUT, "gold.tsv"),
    "--output-dir", OUT,
    "--pvalue-draws", "500", "--seed", "1")

run("analyze-errors",
    "--predictions", os.path.join(OUT, "edges.tsv"),
    "--gold", os.path.join(OUT, "gold.tsv"),
    "--max-rank", "40", "--output-dir", OUT)

print("outputs:")
for name in sorted(os.listdir(OUT)):
    print("  ", os.path.join(OUT, name))
