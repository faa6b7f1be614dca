"""Runs the peakdec binary end to end and validates its JSON against the schema."""

import json
import pathlib
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(0)


def run(binary, *args):
    subprocess.run([binary, *args], check=True)


def main():
    binary, schema_path, workdir = sys.argv[1:4]
    work = pathlib.Path(workdir)
    work.mkdir(parents=True, exist_ok=True)
    schema = json.loads(pathlib.Path(schema_path).read_text())

    samples = work / "two_tone.bin"
    run(binary, "synth", "--output", str(samples), "--n-samples", "512",
        "--tone", "10,0.6135923151542565,0", "--tone", "5,1.8407769454627694,0.5",
        "--awgn-sigma", "0.05", "--seed", "4")

    cases = {
        "argmax_mean": ["--detector", "argmax"],
        "halfband_never": ["--detector", "halfband", "--threshold", "never", "--max-peaks", "5"],
        "minband_abs": ["--detector", "minband", "--threshold", "absolute", "--threshold-value", "10",
                        "--compact"],
    }
    for name, extra in cases.items():
        out = work / f"{name}.json"
        run(binary, "decompose", "--input", str(samples), "--output", str(out), *extra)
        doc = json.loads(out.read_text())
        jsonschema.validate(doc, schema)
        print(f"{name}: {len(doc['peaks'])} peaks, schema ok")

    zero = work / "zero.csv"
    run(binary, "synth", "--output", str(zero), "--n-samples", "64")
    out = work / "zero.json"
    run(binary, "decompose", "--input", str(zero), "--output", str(out))
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, schema)
    assert doc["peaks"] == [], doc["peaks"]
    print("zero signal: schema ok")


if __name__ == "__main__":
    main()
