import numpy as np

# Sub-stream identifiers; never reorder, they are part of the reproducibility contract.
STREAM_MODEL_INIT = 0
STREAM_PHASE1 = 1
STREAM_PHASE2 = 2
STREAM_PHASE3 = 3
STREAM_TRAIN_SUBSET = 4
STREAM_PROTOTYPES = 10
STREAM_SPLITS = 11
STREAM_EXPOSURE = 20


def derive_generator(seed: int, *stream: int) -> np.random.Generator:
    """Build an independent generator for a named sub-stream of a run seed."""
    return np.random.default_rng(np.random.SeedSequence([seed, *stream]))


def derive_seed(seed: int, *stream: int) -> int:
    """Derive a 63-bit integer seed for a sub-stream (for components that store their seed)."""
    state = np.random.SeedSequence([seed, *stream]).generate_state(2, dtype=np.uint32)
    return (int(state[0]) << 31) ^ int(state[1])
