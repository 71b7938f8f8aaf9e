#!/usr/bin/env python3
"""Regenerates the image fixtures under tests/fixtures.

Rasterizes the scikit-learn handwritten digits (8x8, 0..16) up to 28x28
grayscale (0..255) so the fixtures match the 784-dimensional input layout
the toolkit expects, then writes IDX files plus a tiny CSV sample.

The outputs are committed; rerunning this script must be byte-stable.
"""

import struct
from pathlib import Path

import numpy as np
from sklearn.datasets import load_digits

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
SEED = 20240611
TRAIN = 1197  # remainder of the 1797 images becomes the test split


def upscale28(img8: np.ndarray) -> np.ndarray:
    """Bilinear 8x8 -> 28x28, pixel-center aligned."""
    src = img8.astype(np.float64) * (255.0 / 16.0)
    out = np.zeros((28, 28))
    for r in range(28):
        for c in range(28):
            # map destination pixel center into source coordinates
            y = (r + 0.5) * 8.0 / 28.0 - 0.5
            x = (c + 0.5) * 8.0 / 28.0 - 0.5
            y0, x0 = int(np.floor(y)), int(np.floor(x))
            fy, fx = y - y0, x - x0
            acc = 0.0
            for dy in (0, 1):
                for dx in (0, 1):
                    yy = min(max(y0 + dy, 0), 7)
                    xx = min(max(x0 + dx, 0), 7)
                    w = (fy if dy else 1.0 - fy) * (fx if dx else 1.0 - fx)
                    acc += w * src[yy, xx]
            out[r, c] = acc
    return np.clip(np.rint(out), 0, 255).astype(np.uint8)


def write_idx_images(path: Path, images: np.ndarray) -> None:
    n, rows, cols = images.shape
    with open(path, "wb") as f:
        f.write(struct.pack(">IIII", 0x00000803, n, rows, cols))
        f.write(images.tobytes())


def write_idx_labels(path: Path, labels: np.ndarray) -> None:
    with open(path, "wb") as f:
        f.write(struct.pack(">II", 0x00000801, len(labels)))
        f.write(labels.astype(np.uint8).tobytes())


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    data = load_digits()
    rng = np.random.RandomState(SEED)
    order = rng.permutation(len(data.target))

    images = np.stack([upscale28(img) for img in data.images[order]])
    labels = data.target[order].astype(np.uint8)

    write_idx_images(OUT / "digits_train_images.idx3-ubyte", images[:TRAIN])
    write_idx_labels(OUT / "digits_train_labels.idx1-ubyte", labels[:TRAIN])
    write_idx_images(OUT / "digits_test_images.idx3-ubyte", images[TRAIN:])
    write_idx_labels(OUT / "digits_test_labels.idx1-ubyte", labels[TRAIN:])

    # small CSV sample: label followed by 784 pixel values per row
    with open(OUT / "digits_small.csv", "w") as f:
        for i in range(6):
            row = ",".join(str(v) for v in images[TRAIN + i].reshape(-1))
            f.write(f"{labels[TRAIN + i]},{row}\n")

    print(f"wrote {TRAIN} train / {len(labels) - TRAIN} test images to {OUT}")


if __name__ == "__main__":
    main()
