"""Parameter checkpoints: one ``.npz`` per network, float64, bit-exact round trip."""

import logging
from pathlib import Path
from typing import Union

import numpy as np

from ..errors import CheckpointError, DimensionMismatchError
from .mlp import Mlp
from .policy import GaussianPolicy

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
_NO_SEED = -1


def _write(path: PathLike, kind: str, layer_sizes: list[int], seed, params: np.ndarray) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("wb") as fh:
        np.savez(
            fh,
            kind=np.array(kind),
            layer_sizes=np.asarray(layer_sizes, dtype=np.int64),
            seed=np.array(_NO_SEED if seed is None else seed, dtype=np.int64),
            params=np.asarray(params, dtype=np.float64),
        )
    logger.debug(f"wrote {kind} checkpoint {path} ({params.size} parameters)")
    return path


def _read(path: PathLike, kind: str) -> tuple[list[int], object, np.ndarray]:
    path = Path(path)
    if not path.exists():
        raise CheckpointError(f"checkpoint not found: {path}")
    try:
        with np.load(path, allow_pickle=False) as data:
            stored_kind = str(data["kind"])
            layer_sizes = [int(n) for n in data["layer_sizes"]]
            seed = int(data["seed"])
            params = data["params"].astype(np.float64)
    except (KeyError, ValueError, OSError) as e:
        raise CheckpointError(f"unreadable checkpoint {path}: {e}") from e
    if stored_kind != kind:
        raise CheckpointError(f"{path} holds a {stored_kind} checkpoint, expected {kind}")
    return layer_sizes, (None if seed == _NO_SEED else seed), params


def save_net(net: Mlp, path: PathLike) -> Path:
    return _write(path, "mlp", net.layer_sizes, net.seed, net.get_params())


def load_net(path: PathLike) -> Mlp:
    layer_sizes, seed, params = _read(path, "mlp")
    net = Mlp.zeros(layer_sizes)
    net.seed = seed
    try:
        net.set_params(params)
    except DimensionMismatchError as e:
        raise CheckpointError(f"{path}: {e}") from e
    return net


def save_policy(policy: GaussianPolicy, path: PathLike) -> Path:
    net = policy.mean_net
    return _write(path, "gaussian_policy", net.layer_sizes, net.seed, policy.get_params())


def load_policy(path: PathLike) -> GaussianPolicy:
    layer_sizes, seed, params = _read(path, "gaussian_policy")
    net = Mlp.zeros(layer_sizes)
    net.seed = seed
    policy = GaussianPolicy(mean_net=net, log_std=np.zeros(layer_sizes[-1]))
    try:
        policy.set_params(params)
    except DimensionMismatchError as e:
        raise CheckpointError(f"{path}: {e}") from e
    return policy
