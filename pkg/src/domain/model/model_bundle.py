"""Dense feature extractor f(·) plus linear classifier g(·) with hand-written backprop.

Weights are stored (out, in) so a layer maps a batch as `A @ W.T + b`.
Arithmetic is float64; parameters produced by `init_model` and the
optimizer sit on the float32 grid so checkpoints round-trip exactly.
"""

import dataclasses
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from src.domain.common.arrays import FloatArray
from src.domain.common.seeding import STREAM_MODEL_INIT
from src.domain.common.seeding import derive_generator
from src.domain.model.errors import MissingGradientError
from src.domain.model.errors import ModelShapeMismatchError


class Activation(StrEnum):
    RELU = "relu"
    IDENTITY = "identity"

    def apply(self, values: FloatArray) -> FloatArray:
        if self is Activation.RELU:
            return np.maximum(values, 0.0)
        return values

    def derivative(self, pre_activation: FloatArray) -> FloatArray:
        # Subgradient 0 at the ReLU kink.
        if self is Activation.RELU:
            return (pre_activation > 0.0).astype(np.float64)
        return np.ones_like(pre_activation)


def snap_to_float32(values: npt.ArrayLike) -> FloatArray:
    return np.asarray(values, dtype=np.float32).astype(np.float64)


def _frozen_copy(values: npt.ArrayLike) -> FloatArray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DenseLayer:
    weight: FloatArray
    bias: FloatArray

    def __post_init__(self) -> None:
        weight = _frozen_copy(self.weight)
        bias = _frozen_copy(self.bias)
        if weight.ndim != 2 or bias.shape != (weight.shape[0],):  # noqa: PLR2004
            raise ModelShapeMismatchError(
                f"Layer weight {weight.shape} and bias {bias.shape} do not match."
            )
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "bias", bias)

    @property
    def in_dim(self) -> int:
        return int(self.weight.shape[1])

    @property
    def out_dim(self) -> int:
        return int(self.weight.shape[0])

    def apply(self, inputs: FloatArray) -> FloatArray:
        return inputs @ self.weight.T + self.bias


@dataclass(frozen=True, eq=False)
class ModelBundle:
    """Immutable parameter snapshot.

    `level_heads[i]` is an optional separate classifier for hierarchy level
    i + 2, used only by the per-level baseline. When `extractor_frozen` is
    set, backward emits zero extractor gradients and the optimizer leaves
    those parameters untouched.
    """

    extractor_layers: tuple[DenseLayer, ...]
    classifier: DenseLayer
    level_heads: tuple[DenseLayer, ...] = ()
    activation: Activation = Activation.RELU
    extractor_frozen: bool = False
    seed: int | None = None

    def __post_init__(self) -> None:
        if not self.extractor_layers:
            raise ModelShapeMismatchError("At least one extractor layer is required.")
        for previous, layer in zip(
            self.extractor_layers, self.extractor_layers[1:], strict=False
        ):
            if layer.in_dim != previous.out_dim:
                raise ModelShapeMismatchError(
                    f"Extractor layer expects width {layer.in_dim}, previous layer emits {previous.out_dim}."
                )
        for head in (self.classifier, *self.level_heads):
            if head.in_dim != self.embedding_dim:
                raise ModelShapeMismatchError(
                    f"Head expects width {head.in_dim}, embeddings have {self.embedding_dim}."
                )
        object.__setattr__(self, "activation", Activation(self.activation))

    @property
    def input_dim(self) -> int:
        return self.extractor_layers[0].in_dim

    @property
    def embedding_dim(self) -> int:
        return self.extractor_layers[-1].out_dim

    @property
    def num_classes(self) -> int:
        return self.classifier.out_dim

    @property
    def layers(self) -> tuple[DenseLayer, ...]:
        """Every layer in parameter order: extractor, classifier, level heads."""
        return (*self.extractor_layers, self.classifier, *self.level_heads)

    def parameters(self) -> list[FloatArray]:
        return [array for layer in self.layers for array in (layer.weight, layer.bias)]

    def trainable_mask(self) -> list[bool]:
        extractor_arrays = 2 * len(self.extractor_layers)
        return [
            not (self.extractor_frozen and index < extractor_arrays)
            for index in range(2 * len(self.layers))
        ]

    def with_parameters(self, parameters: Sequence[FloatArray]) -> "ModelBundle":
        if len(parameters) != 2 * len(self.layers):
            raise ModelShapeMismatchError(
                f"Expected {2 * len(self.layers)} parameter arrays, got {len(parameters)}."
            )
        for current, new in zip(self.parameters(), parameters, strict=True):
            if np.shape(new) != current.shape:
                raise ModelShapeMismatchError(
                    f"Parameter shape {np.shape(new)} does not match {current.shape}."
                )
        layers = [
            DenseLayer(parameters[2 * i], parameters[2 * i + 1])
            for i in range(len(self.layers))
        ]
        n_extractor = len(self.extractor_layers)
        return dataclasses.replace(
            self,
            extractor_layers=tuple(layers[:n_extractor]),
            classifier=layers[n_extractor],
            level_heads=tuple(layers[n_extractor + 1 :]),
        )

    def __repr__(self) -> str:
        widths = [self.input_dim, *(layer.out_dim for layer in self.extractor_layers)]
        return (
            f"ModelBundle(widths={widths}, classes={self.num_classes}, "
            f"level_heads={len(self.level_heads)}, frozen={self.extractor_frozen})"
        )


@dataclass(frozen=True, eq=False)
class LayerGrad:
    weight: FloatArray
    bias: FloatArray


@dataclass(frozen=True, eq=False)
class GradBundle:
    """Gradients laid out like ModelBundle.layers."""

    layers: tuple[LayerGrad, ...]

    def arrays(self) -> list[FloatArray]:
        return [array for layer in self.layers for array in (layer.weight, layer.bias)]

    def is_finite(self) -> bool:
        return all(np.isfinite(array).all() for array in self.arrays())

    def max_abs(self) -> float:
        return max(float(np.abs(array).max(initial=0.0)) for array in self.arrays())


class ForwardPass(NamedTuple):
    embeddings: FloatArray
    logits: FloatArray


def _layer(rng: np.random.Generator, fan_in: int, fan_out: int) -> DenseLayer:
    bound = 1.0 / np.sqrt(fan_in)
    return DenseLayer(
        weight=snap_to_float32(rng.uniform(-bound, bound, size=(fan_out, fan_in))),
        bias=np.zeros(fan_out),
    )


def init_model(
    input_dim: int,
    hidden_dims: Sequence[int],
    embedding_dim: int,
    num_classes: int,
    seed: int,
    level_widths: Sequence[int] = (),
    activation: Activation = Activation.RELU,
) -> ModelBundle:
    """Fan-in scaled uniform weights U(±1/√fan_in), zero biases, reproducible from `seed`."""
    rng = derive_generator(seed, STREAM_MODEL_INIT)
    widths = [input_dim, *hidden_dims, embedding_dim]
    extractor = tuple(
        _layer(rng, fan_in, fan_out)
        for fan_in, fan_out in zip(widths, widths[1:], strict=False)
    )
    classifier = _layer(rng, embedding_dim, num_classes)
    heads = tuple(_layer(rng, embedding_dim, width) for width in level_widths)
    return ModelBundle(
        extractor_layers=extractor,
        classifier=classifier,
        level_heads=heads,
        activation=activation,
        seed=seed,
    )


def _check_inputs(model: ModelBundle, inputs: npt.ArrayLike) -> FloatArray:
    x = np.asarray(inputs, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != model.input_dim:  # noqa: PLR2004
        raise ModelShapeMismatchError(
            f"Expected a batch×{model.input_dim} input, got shape {x.shape}."
        )
    return x


def _extract(model: ModelBundle, x: FloatArray) -> tuple[list[FloatArray], list[FloatArray]]:
    """Layer inputs and pre-activations of the extractor."""
    inputs: list[FloatArray] = []
    pre_activations: list[FloatArray] = []
    a = x
    for layer in model.extractor_layers:
        inputs.append(a)
        h = layer.apply(a)
        pre_activations.append(h)
        a = model.activation.apply(h)
    return inputs, pre_activations


def embed(model: ModelBundle, inputs: npt.ArrayLike) -> FloatArray:
    x = _check_inputs(model, inputs)
    _, pre_activations = _extract(model, x)
    return model.activation.apply(pre_activations[-1])


def forward(model: ModelBundle, inputs: npt.ArrayLike) -> ForwardPass:
    """V = f(X), Z = g(V)."""
    embeddings = embed(model, inputs)
    return ForwardPass(embeddings, model.classifier.apply(embeddings))


def forward_levels(model: ModelBundle, inputs: npt.ArrayLike) -> list[FloatArray]:
    """Leaf logits followed by the logits of every level head."""
    embeddings = embed(model, inputs)
    return [head.apply(embeddings) for head in (model.classifier, *model.level_heads)]


def _check_grad(name: str, grad: npt.ArrayLike, shape: tuple[int, ...]) -> FloatArray:
    array = np.asarray(grad, dtype=np.float64)
    if array.shape != shape:
        raise ModelShapeMismatchError(
            f"{name} gradient has shape {array.shape}, expected {shape}."
        )
    return array


def backward(
    model: ModelBundle,
    inputs: npt.ArrayLike,
    d_embeddings: npt.ArrayLike | None = None,
    d_logits: npt.ArrayLike | None = None,
    d_level_logits: Sequence[npt.ArrayLike] | None = None,
) -> GradBundle:
    """Parameter gradients for upstream gradients on V, Z and the level heads.

    Contributions of all supplied upstream gradients are summed.
    """
    if d_embeddings is None and d_logits is None and not d_level_logits:
        raise MissingGradientError()

    x = _check_inputs(model, inputs)
    batch = x.shape[0]
    layer_inputs, pre_activations = _extract(model, x)
    embeddings = model.activation.apply(pre_activations[-1])

    d_v = (
        np.zeros_like(embeddings)
        if d_embeddings is None
        else _check_grad("Embedding", d_embeddings, embeddings.shape).copy()
    )

    head_grads: list[LayerGrad] = []
    level_grads = list(d_level_logits or [])
    if level_grads and len(level_grads) != len(model.level_heads):
        raise ModelShapeMismatchError(
            f"Got {len(level_grads)} level gradients for {len(model.level_heads)} level heads."
        )
    upstream = [d_logits, *(level_grads or [None] * len(model.level_heads))]
    for head, d_out in zip((model.classifier, *model.level_heads), upstream, strict=True):
        if d_out is None:
            head_grads.append(LayerGrad(np.zeros_like(head.weight), np.zeros_like(head.bias)))
            continue
        d_z = _check_grad("Logit", d_out, (batch, head.out_dim))
        head_grads.append(LayerGrad(d_z.T @ embeddings, d_z.sum(axis=0)))
        d_v += d_z @ head.weight

    extractor_grads: list[LayerGrad]
    if model.extractor_frozen:
        extractor_grads = [
            LayerGrad(np.zeros_like(layer.weight), np.zeros_like(layer.bias))
            for layer in model.extractor_layers
        ]
    else:
        extractor_grads = []
        d_a = d_v
        for layer, a_in, h in zip(
            reversed(model.extractor_layers),
            reversed(layer_inputs),
            reversed(pre_activations),
            strict=True,
        ):
            d_h = d_a * model.activation.derivative(h)
            extractor_grads.append(LayerGrad(d_h.T @ a_in, d_h.sum(axis=0)))
            d_a = d_h @ layer.weight
        extractor_grads.reverse()

    return GradBundle(layers=(*extractor_grads, *head_grads))


def freeze_extractor(model: ModelBundle) -> ModelBundle:
    """View of `model` whose extractor receives zero gradients and no updates."""
    return dataclasses.replace(model, extractor_frozen=True)


def unfreeze_extractor(model: ModelBundle) -> ModelBundle:
    return dataclasses.replace(model, extractor_frozen=False)


def without_level_heads(model: ModelBundle) -> ModelBundle:
    return dataclasses.replace(model, level_heads=())
