"""Builds the extension with cargo and copies it to python/build/braidinv.so."""

import os
import shutil
import subprocess

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def main():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "braidinv-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    out = os.path.join(ROOT, "python", "build")
    os.makedirs(out, exist_ok=True)
    shutil.copy(os.path.join(ROOT, "target", "release", "libbraidinv_py.so"), os.path.join(out, "braidinv.so"))
    print(os.path.join(out, "braidinv.so"))


if __name__ == "__main__":
    main()
