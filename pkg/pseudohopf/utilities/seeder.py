import numpy as np


def sample_rng(seed: int, *stream: int) -> np.random.Generator:
    """
    Independent generator for one sampling stream.

    Streams are addressed by integer keys (e.g. fibration index, instance index, check index), so every
    check draws the same samples for a fixed seed no matter in which order or on which worker it runs.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=tuple(stream))))
