#!/usr/bin/env python3
"""Download the benchmark graph-classification datasets.

Grabs MUTAG, PTC, PROTEINS, and NCI1 from the TU graph-learning
collection and unpacks them into tests/data/<NAME>/ in the multi-file
layout the package reads (``<NAME>_A.txt`` and friends). The PTC
archive is published as PTC_MR; its files are renamed to the plain PTC
prefix after extraction.

Needs outbound network access. Re-running skips datasets that are
already in place. Usage:

    python3 scripts/fetch_datasets.py [--dest tests/data] [--only MUTAG ...]
"""

from __future__ import annotations

import argparse
import io
import os
import shutil
import sys
import urllib.error
import urllib.request
import zipfile

BASE_URL = "https://www.chrsmrrs.com/graphkerneldatasets"

# local name -> archive name in the collection
DATASETS = {
    "MUTAG": "MUTAG",
    "PTC": "PTC_MR",
    "PROTEINS": "PROTEINS",
    "NCI1": "NCI1",
}

REQUIRED_SUFFIXES = ("_A.txt", "_graph_indicator.txt", "_graph_labels.txt")


def fetch_one(local_name: str, remote_name: str, dest_root: str) -> bool:
    target = os.path.join(dest_root, local_name)
    if os.path.exists(os.path.join(target, local_name + "_A.txt")):
        print(f"{local_name}: already present, skipping")
        return True
    url = f"{BASE_URL}/{remote_name}.zip"
    print(f"{local_name}: downloading {url}")
    try:
        with urllib.request.urlopen(url, timeout=120) as response:
            payload = response.read()
    except (urllib.error.URLError, OSError) as exc:
        print(f"{local_name}: download failed ({exc})", file=sys.stderr)
        return False

    os.makedirs(target, exist_ok=True)
    with zipfile.ZipFile(io.BytesIO(payload)) as archive:
        for member in archive.namelist():
            base = os.path.basename(member)
            if not base or not base.startswith(remote_name + "_"):
                continue
            renamed = local_name + base[len(remote_name):]
            with archive.open(member) as src, open(
                os.path.join(target, renamed), "wb"
            ) as dst:
                shutil.copyfileobj(src, dst)

    missing = [
        suffix
        for suffix in REQUIRED_SUFFIXES
        if not os.path.exists(os.path.join(target, local_name + suffix))
    ]
    if missing:
        print(f"{local_name}: archive lacked {missing}", file=sys.stderr)
        return False
    print(f"{local_name}: ready under {target}")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    default_dest = os.path.join(os.path.dirname(__file__), "..", "tests", "data")
    parser.add_argument("--dest", default=os.path.normpath(default_dest))
    parser.add_argument("--only", nargs="*", choices=sorted(DATASETS), default=None)
    args = parser.parse_args()

    names = args.only if args.only else sorted(DATASETS)
    ok = True
    for local_name in names:
        ok &= fetch_one(local_name, DATASETS[local_name], args.dest)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
