from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import replace

import numpy as np

from src.domain.common.arrays import FloatArray
from src.domain.model.errors import ModelShapeMismatchError
from src.domain.model.errors import NonFiniteGradientError
from src.domain.model.model_bundle import GradBundle
from src.domain.model.model_bundle import ModelBundle
from src.domain.model.model_bundle import snap_to_float32

DEFAULT_BETA1 = 0.9
DEFAULT_BETA2 = 0.999
DEFAULT_EPS = 1e-8


@dataclass(frozen=True, eq=False)
class AdamState:
    first_moments: tuple[FloatArray, ...]
    second_moments: tuple[FloatArray, ...]
    step: int = 0
    beta1: float = DEFAULT_BETA1
    beta2: float = DEFAULT_BETA2
    eps: float = DEFAULT_EPS

    @classmethod
    def zeros_like(
        cls,
        parameters: Sequence[FloatArray],
        beta1: float = DEFAULT_BETA1,
        beta2: float = DEFAULT_BETA2,
        eps: float = DEFAULT_EPS,
    ) -> "AdamState":
        return cls(
            first_moments=tuple(np.zeros_like(p) for p in parameters),
            second_moments=tuple(np.zeros_like(p) for p in parameters),
            beta1=beta1,
            beta2=beta2,
            eps=eps,
        )

    @classmethod
    def for_model(cls, model: ModelBundle) -> "AdamState":
        return cls.zeros_like(model.parameters())

    def apply(
        self,
        parameters: Sequence[FloatArray],
        grads: Sequence[FloatArray],
        lr: float,
        trainable: Sequence[bool] | None = None,
    ) -> tuple[list[FloatArray], "AdamState"]:
        """One bias-corrected Adam update over matching parameter/gradient lists.

        Entries with `trainable[i] = False` keep their value and moments.
        """
        if not len(parameters) == len(grads) == len(self.first_moments):
            raise ModelShapeMismatchError(
                f"Adam got {len(parameters)} parameters, {len(grads)} gradients "
                f"and {len(self.first_moments)} moment slots."
            )
        mask = [True] * len(parameters) if trainable is None else list(trainable)
        if not all(np.isfinite(g).all() for g, on in zip(grads, mask, strict=True) if on):
            raise NonFiniteGradientError()

        step = self.step + 1
        correction1 = 1.0 - self.beta1**step
        correction2 = 1.0 - self.beta2**step

        new_params: list[FloatArray] = []
        new_m: list[FloatArray] = []
        new_v: list[FloatArray] = []
        for p, g, m, v, on in zip(
            parameters, grads, self.first_moments, self.second_moments, mask, strict=True
        ):
            if np.shape(g) != p.shape or m.shape != p.shape:
                raise ModelShapeMismatchError(
                    f"Gradient shape {np.shape(g)} does not match parameter {p.shape}."
                )
            if not on:
                new_params.append(p)
                new_m.append(m)
                new_v.append(v)
                continue
            m = self.beta1 * m + (1.0 - self.beta1) * g
            v = self.beta2 * v + (1.0 - self.beta2) * np.square(g)
            m_hat = m / correction1
            v_hat = v / correction2
            new_params.append(p - lr * m_hat / (np.sqrt(v_hat) + self.eps))
            new_m.append(m)
            new_v.append(v)

        return new_params, replace(
            self, first_moments=tuple(new_m), second_moments=tuple(new_v), step=step
        )


def adam_step(
    state: AdamState, model: ModelBundle, grads: GradBundle, lr: float
) -> tuple[ModelBundle, AdamState]:
    """Update every trainable parameter of `model`; results are rounded to the float32 grid.

    Raises:
        NonFiniteGradientError: A trainable gradient holds NaN or Inf
    """
    parameters, state = state.apply(
        model.parameters(), grads.arrays(), lr, trainable=model.trainable_mask()
    )
    snapped = [
        snap_to_float32(p) if on else p
        for p, on in zip(parameters, model.trainable_mask(), strict=True)
    ]
    return model.with_parameters(snapped), state
