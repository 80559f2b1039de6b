"""Packed array form of an instance for the search kernels.

Colors are remapped to palette indices 0..p-1 (palette = sorted union of all
lists). Adjacency is CSR (indptr/nbrs), permissibility a flat n*p byte mask.
The numpy arrays feed the compiled kernel; adj/masks/sizes are plain-Python
mirrors for the pure kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..instance import Instance


@dataclass(frozen=True, eq=False)
class PackedProblem:
    n: int
    p: int
    palette: tuple[int, ...]
    indptr: np.ndarray
    nbrs: np.ndarray
    mask: np.ndarray
    list_size: np.ndarray
    adj: tuple[tuple[int, ...], ...]
    masks: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]

    def color_index(self, color: int) -> int:
        return self.palette.index(color)


def pack(inst: Instance) -> PackedProblem:
    n = inst.n
    palette = tuple(sorted(inst.palette))
    p = len(palette)

    adj = tuple(tuple(sorted(inst.graph.adj[v])) for v in range(n))
    indptr = np.zeros(n + 1, dtype=np.int32)
    for v in range(n):
        indptr[v + 1] = indptr[v] + len(adj[v])
    nbrs = np.fromiter(
        (u for row in adj for u in row), dtype=np.int32, count=int(indptr[n])
    )

    masks = tuple(
        tuple(1 if palette[c] in inst.lists[v] else 0 for c in range(p))
        for v in range(n)
    )
    mask = np.fromiter(
        (bit for row in masks for bit in row), dtype=np.uint8, count=n * p
    )
    sizes = tuple(len(inst.lists[v]) for v in range(n))
    list_size = np.fromiter(sizes, dtype=np.int32, count=n)

    return PackedProblem(
        n=n,
        p=p,
        palette=palette,
        indptr=indptr,
        nbrs=nbrs,
        mask=mask,
        list_size=list_size,
        adj=adj,
        masks=masks,
        sizes=sizes,
    )
