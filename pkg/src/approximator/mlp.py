"""Fully connected tanh network with hand-written backpropagation."""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DimensionMismatchError


@dataclass
class Mlp:
    """tanh hidden layers, linear output.

    ``weights[k]`` has shape (n_out, n_in) and ``biases[k]`` shape (n_out,).
    The flat parameter layout is, layer by layer, the row-major weight matrix
    followed by the bias vector.
    """
    layer_sizes: list[int]
    weights: list[np.ndarray]
    biases: list[np.ndarray]
    seed: Optional[int] = None
    _shapes: list[tuple[int, int]] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.layer_sizes) < 2:
            raise ValueError(f"need at least input and output sizes, got {self.layer_sizes}")
        self.layer_sizes = [int(n) for n in self.layer_sizes]
        self._shapes = list(zip(self.layer_sizes[1:], self.layer_sizes[:-1]))
        for k, (n_out, n_in) in enumerate(self._shapes):
            if self.weights[k].shape != (n_out, n_in) or self.biases[k].shape != (n_out,):
                raise DimensionMismatchError(f"layer {k} parameters do not match {(n_out, n_in)}")

    @classmethod
    def init(cls, layer_sizes: Sequence[int], seed: int) -> "Mlp":
        """Glorot-uniform weights in +-sqrt(6 / (n_in + n_out)), zero biases."""
        rng = np.random.default_rng(seed)
        weights, biases = [], []
        for n_in, n_out in zip(layer_sizes[:-1], layer_sizes[1:]):
            limit = np.sqrt(6.0 / (n_in + n_out))
            weights.append(rng.uniform(-limit, limit, size=(n_out, n_in)))
            biases.append(np.zeros(n_out))
        return cls(list(layer_sizes), weights, biases, seed=seed)

    @classmethod
    def zeros(cls, layer_sizes: Sequence[int]) -> "Mlp":
        shapes = list(zip(layer_sizes[1:], layer_sizes[:-1]))
        return cls(
            list(layer_sizes),
            [np.zeros(shape) for shape in shapes],
            [np.zeros(n_out) for n_out, _ in shapes],
        )

    @property
    def param_count(self) -> int:
        return sum((n_in + 1) * n_out for n_out, n_in in self._shapes)

    @property
    def n_in(self) -> int:
        return self.layer_sizes[0]

    @property
    def n_out(self) -> int:
        return self.layer_sizes[-1]

    def get_params(self) -> np.ndarray:
        return np.concatenate(
            [np.concatenate([w.ravel(), b]) for w, b in zip(self.weights, self.biases)]
        )

    def set_params(self, flat: ArrayLike) -> None:
        flat = np.asarray(flat, dtype=float)
        if flat.shape != (self.param_count,):
            raise DimensionMismatchError(
                f"expected {self.param_count} parameters, got shape {flat.shape}"
            )
        offset = 0
        for k, (n_out, n_in) in enumerate(self._shapes):
            size = n_out * n_in
            self.weights[k] = flat[offset:offset + size].reshape(n_out, n_in).copy()
            offset += size
            self.biases[k] = flat[offset:offset + n_out].copy()
            offset += n_out

    def copy(self) -> "Mlp":
        return Mlp(
            list(self.layer_sizes),
            [w.copy() for w in self.weights],
            [b.copy() for b in self.biases],
            seed=self.seed,
        )

    def _as_batch(self, inputs: ArrayLike) -> tuple[np.ndarray, bool]:
        x = np.asarray(inputs, dtype=float)
        single = x.ndim == 1
        x = np.atleast_2d(x)
        if x.ndim != 2 or x.shape[1] != self.n_in:
            raise DimensionMismatchError(
                f"input has shape {np.shape(inputs)}, network expects {self.n_in} features"
            )
        return x, single

    def _forward_cache(self, x: np.ndarray) -> tuple[list[np.ndarray], np.ndarray]:
        activations = [x]
        out = x
        last = len(self.weights) - 1
        for k, (w, b) in enumerate(zip(self.weights, self.biases)):
            z = out @ w.T + b
            out = z if k == last else np.tanh(z)
            activations.append(out)
        return activations, out

    def __call__(self, inputs: ArrayLike) -> np.ndarray:
        return self.forward(inputs)

    def forward(self, inputs: ArrayLike) -> np.ndarray:
        """Output for one input vector (1-D) or a batch of rows (2-D)."""
        x, single = self._as_batch(inputs)
        _, out = self._forward_cache(x)
        return out[0] if single else out

    def vjp(self, inputs: ArrayLike, out_grad: ArrayLike) -> np.ndarray:
        """Flat gradient of sum_b out_grad[b] . f(inputs[b]) w.r.t. the parameters."""
        x, _ = self._as_batch(inputs)
        g = np.atleast_2d(np.asarray(out_grad, dtype=float))
        if g.shape != (x.shape[0], self.n_out):
            raise DimensionMismatchError(
                f"output gradient has shape {g.shape}, expected {(x.shape[0], self.n_out)}"
            )
        activations, _ = self._forward_cache(x)

        grads: list[np.ndarray] = []
        for k in range(len(self.weights) - 1, -1, -1):
            a_in = activations[k]
            grads.append(g.sum(axis=0))
            grads.append((g.T @ a_in).ravel())
            if k > 0:
                g = (g @ self.weights[k]) * (1.0 - activations[k] ** 2)  # tanh'
        return np.concatenate(grads[::-1])

    def value_grad(self, inputs: ArrayLike) -> np.ndarray:
        """Gradient of the scalar output at a single input."""
        if self.n_out != 1:
            raise DimensionMismatchError(
                f"value_grad needs a scalar-output network, this one has {self.n_out} outputs"
            )
        x = np.asarray(inputs, dtype=float)
        if x.ndim != 1:
            raise DimensionMismatchError("value_grad takes a single input vector")
        return self.vjp(x[None, :], np.ones((1, 1)))


def forward(net: Mlp, inputs: ArrayLike) -> np.ndarray:
    """Functional wrapper for ``Mlp.forward``."""
    return net.forward(inputs)


def value_grad(net: Mlp, inputs: ArrayLike) -> np.ndarray:
    """Functional wrapper for ``Mlp.value_grad``."""
    return net.value_grad(inputs)
