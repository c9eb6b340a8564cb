"""Minimal reverse-mode autodiff over 2-D float64 numpy arrays.

Every value in a graph is a matrix; vectors are single-row matrices and
scalars are 1x1. Gradients accumulate across a single backward() call
seeded with an explicit output gradient, which lets loss functions live
outside the graph (compute loss and d(loss)/d(output) in plain numpy,
then seed).
"""

import numpy as np

NEG_INF = float(np.finfo(np.float64).min)


class Tensor:
    __slots__ = ("data", "grad", "_parents", "_backprop")

    def __init__(self, data, parents=(), backprop=None):
        arr = np.asarray(data, dtype=np.float64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError(f"tensors must be 2-D, got shape {arr.shape}")
        self.data = arr
        self.grad = None
        self._parents = parents
        self._backprop = backprop

    @property
    def shape(self):
        return self.data.shape

    def _accumulate(self, g):
        if self.grad is None:
            self.grad = np.zeros_like(self.data)
        self.grad += g

    def backward(self, seed) -> None:
        """Backpropagate from this tensor with the given output gradient."""
        seed = np.asarray(seed, dtype=np.float64).reshape(self.data.shape)
        order = []
        seen = set()
        stack = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            for p in node._parents:
                stack.append((p, False))
        self._accumulate(seed)
        for node in reversed(order):
            if node._backprop is not None and node.grad is not None:
                node._backprop(node.grad)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, mul_scalar(other, -1.0))

    def __mul__(self, other):
        return mul(self, other)

    def __matmul__(self, other):
        return matmul(self, other)

    def __repr__(self):
        return f"Tensor(shape={self.data.shape})"


def _unbroadcast(g, shape):
    """Reduce gradient g back to a broadcast operand's shape."""
    if g.shape == shape:
        return g
    for axis in (0, 1):
        if shape[axis] == 1 and g.shape[axis] != 1:
            g = g.sum(axis=axis, keepdims=True)
    return g


def add(a: Tensor, b: Tensor) -> Tensor:
    out = Tensor(a.data + b.data, parents=(a, b))

    def backprop(g):
        a._accumulate(_unbroadcast(g, a.data.shape))
        b._accumulate(_unbroadcast(g, b.data.shape))

    out._backprop = backprop
    return out


def add_const(a: Tensor, c) -> Tensor:
    """Add a constant array; no gradient flows to the constant."""
    out = Tensor(a.data + np.asarray(c, dtype=np.float64), parents=(a,))
    out._backprop = lambda g: a._accumulate(_unbroadcast(g, a.data.shape))
    return out


def mul(a: Tensor, b: Tensor) -> Tensor:
    out = Tensor(a.data * b.data, parents=(a, b))

    def backprop(g):
        a._accumulate(_unbroadcast(g * b.data, a.data.shape))
        b._accumulate(_unbroadcast(g * a.data, b.data.shape))

    out._backprop = backprop
    return out


def mul_scalar(a: Tensor, s: float) -> Tensor:
    out = Tensor(a.data * s, parents=(a,))
    out._backprop = lambda g: a._accumulate(g * s)
    return out


def matmul(a: Tensor, b: Tensor) -> Tensor:
    out = Tensor(a.data @ b.data, parents=(a, b))

    def backprop(g):
        a._accumulate(g @ b.data.T)
        b._accumulate(a.data.T @ g)

    out._backprop = backprop
    return out


def tanh(a: Tensor) -> Tensor:
    y = np.tanh(a.data)
    out = Tensor(y, parents=(a,))
    out._backprop = lambda g: a._accumulate(g * (1.0 - y * y))
    return out


def sigmoid(a: Tensor) -> Tensor:
    x = a.data
    y = np.where(x >= 0, 1.0 / (1.0 + np.exp(-np.abs(x))),
                 np.exp(-np.abs(x)) / (1.0 + np.exp(-np.abs(x))))
    out = Tensor(y, parents=(a,))
    out._backprop = lambda g: a._accumulate(g * y * (1.0 - y))
    return out


def transpose(a: Tensor) -> Tensor:
    out = Tensor(a.data.T, parents=(a,))
    out._backprop = lambda g: a._accumulate(g.T)
    return out


def rows(a: Tensor, indices) -> Tensor:
    """Select rows by index (embedding lookup); backward scatter-adds."""
    idx = np.asarray(indices, dtype=np.int64)
    out = Tensor(a.data[idx], parents=(a,))

    def backprop(g):
        if a.grad is None:
            a.grad = np.zeros_like(a.data)
        np.add.at(a.grad, idx, g)

    out._backprop = backprop
    return out


def concat(tensors, axis: int = 1) -> Tensor:
    tensors = list(tensors)
    out = Tensor(np.concatenate([t.data for t in tensors], axis=axis),
                 parents=tuple(tensors))
    sizes = [t.data.shape[axis] for t in tensors]
    offsets = np.cumsum([0] + sizes)

    def backprop(g):
        for t, lo, hi in zip(tensors, offsets[:-1], offsets[1:]):
            t._accumulate(g[:, lo:hi] if axis == 1 else g[lo:hi, :])

    out._backprop = backprop
    return out
