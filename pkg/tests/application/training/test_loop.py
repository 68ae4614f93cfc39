import math
from unittest.mock import MagicMock

import numpy as np
import pytest

from src.application.training.config import TrainConfig
from src.application.training.errors import TrainingDivergedError
from src.application.training.loop import train_model
from src.application.training.objectives import BceObjective
from src.application.training.objectives import MlmcObjective
from src.application.training.objectives import Objective
from src.application.training.objectives import TrainingView
from src.application.training.objectives import build_view
from src.application.training.ports.training_monitor import SilentTrainingMonitor
from src.application.training.ports.training_monitor import TrainingMonitor
from src.domain.dataset.entities.multilabel_dataset import DatasetSplits
from src.domain.hierarchy.entities.hierarchy_tree import HierarchyTree
from src.domain.model.model_bundle import GradBundle
from src.domain.model.model_bundle import LayerGrad
from src.domain.model.model_bundle import ModelBundle
from src.domain.model.model_bundle import init_model
from src.domain.sampling.batch_sampler import SamplerKind
from src.domain.sampling.batch_sampler import SamplerSpec
from src.domain.sampling.delta_weights import DeltaTransform


def _zero_grads(model: ModelBundle) -> GradBundle:
    return GradBundle(
        layers=tuple(
            LayerGrad(np.zeros_like(layer.weight), np.zeros_like(layer.bias))
            for layer in model.layers
        )
    )


@pytest.fixture
def model(small_splits: DatasetSplits) -> ModelBundle:
    return init_model(small_splits.d, (8,), 4, small_splits.k, seed=0)


@pytest.fixture
def views(small_splits: DatasetSplits, small_tree: HierarchyTree) -> tuple[TrainingView, TrainingView]:
    return (
        build_view(small_splits.train, small_tree, with_delta=False),
        build_view(small_splits.val, small_tree, with_delta=False),
    )


SPEC = SamplerSpec(kind=SamplerKind.INSTANCE_BALANCED, batch_size=32, seed=0)


class TestTrainingView:
    """Test build_view() and TrainingView.rows()."""

    def test_rows_slice_every_array(self, small_splits: DatasetSplits, small_tree: HierarchyTree) -> None:
        """Test that δ rows follow the selected samples."""
        view = build_view(small_splits.train, small_tree, with_delta=True, delta_at_parents=True)

        batch = view.rows([3, 0, 3])

        assert view.delta is not None
        assert batch.delta is not None
        np.testing.assert_array_equal(batch.features, view.features[[3, 0, 3]])
        np.testing.assert_array_equal(batch.delta.delta, view.delta.delta[[3, 0, 3]])
        assert set(batch.parent_delta) == {2}
        assert batch.parent_delta[2].shape == (3, 3)

    def test_without_delta(self, small_splits: DatasetSplits, small_tree: HierarchyTree) -> None:
        """Test that plain views carry no δ."""
        view = build_view(small_splits.train, small_tree, with_delta=False, delta_at_parents=True)

        assert view.delta is None
        assert not view.parent_delta
        assert view.features.dtype == np.float64


class TestObjectives:
    """Test phase objectives."""

    def test_validation_pass_skips_gradients(self, model: ModelBundle, views: tuple[TrainingView, TrainingView]) -> None:
        """Test that with_grad=False returns no gradient."""
        value, grads = BceObjective().loss(model, views[1], with_grad=False)

        assert grads is None
        assert value > 0

    def test_parent_weighted_mlmc(
        self, model: ModelBundle, small_splits: DatasetSplits, small_tree: HierarchyTree
    ) -> None:
        """Test that δ at parent levels changes the loss."""
        view = build_view(small_splits.train, small_tree, with_delta=True, delta_at_parents=True)

        leaf_only, _ = MlmcObjective(small_tree, DeltaTransform.SQRT).loss(model, view, False)
        with_parents, grads = MlmcObjective(small_tree, DeltaTransform.SQRT, True).loss(model, view)

        assert with_parents != leaf_only
        assert grads is not None
        assert grads.is_finite()


class TestTrainModel:
    """Test train_model()."""

    def test_epoch_records(self, model: ModelBundle, views: tuple[TrainingView, TrainingView]) -> None:
        """Test that each epoch is recorded with its learning rate."""
        cfg = TrainConfig(epochs=3, batch_size=32, lr_initial=1e-2)

        result = train_model(1, model, BceObjective(), *views, SPEC, cfg, SilentTrainingMonitor())

        assert [e.epoch for e in result.record.epochs] == [1, 2, 3]
        assert result.record.lr_trace == [1e-2, 1e-2, 1e-2]
        assert 1 <= result.record.best_epoch <= 3  # noqa: PLR2004
        assert result.record.best_val_loss == min(e.val_loss for e in result.record.epochs)
        assert result.record.epochs[0].improved
        assert result.step > 0

    def test_loss_decreases(self, model: ModelBundle, views: tuple[TrainingView, TrainingView]) -> None:
        """Test that training improves the validation loss."""
        cfg = TrainConfig(epochs=5, batch_size=32, lr_initial=1e-2)
        objective = BceObjective()
        initial, _ = objective.loss(model, views[1], with_grad=False)

        result = train_model(1, model, objective, *views, SPEC, cfg, SilentTrainingMonitor())

        assert result.record.best_val_loss < initial

    def test_monitor_events(self, model: ModelBundle, views: tuple[TrainingView, TrainingView]) -> None:
        """Test that the monitor sees start, every epoch and the end."""
        monitor = MagicMock(spec=TrainingMonitor)
        cfg = TrainConfig(epochs=2, batch_size=32)

        train_model(1, model, BceObjective(), *views, SPEC, cfg, monitor)

        monitor.phase_started.assert_called_once_with(1, 2, math.ceil(144 / 32))
        assert monitor.epoch_finished.call_count == 2  # noqa: PLR2004
        monitor.phase_finished.assert_called_once()

    def test_deterministic(self, model: ModelBundle, views: tuple[TrainingView, TrainingView]) -> None:
        """Test that identical inputs give identical records and parameters."""
        cfg = TrainConfig(epochs=2, batch_size=32)

        first = train_model(1, model, BceObjective(), *views, SPEC, cfg, SilentTrainingMonitor())
        second = train_model(1, model, BceObjective(), *views, SPEC, cfg, SilentTrainingMonitor())

        assert first.record.model_dump() == second.record.model_dump()
        for a, b in zip(first.model.parameters(), second.model.parameters(), strict=True):
            np.testing.assert_array_equal(a, b)

    def test_early_stopping_and_plateau(self, model: ModelBundle, views: tuple[TrainingView, TrainingView]) -> None:
        """Test that a flat validation loss stops training and reduces the rate."""
        objective = MagicMock(spec=Objective)
        objective.loss.return_value = (1.0, _zero_grads(model))
        monitor = MagicMock(spec=TrainingMonitor)
        cfg = TrainConfig(epochs=20, batch_size=32, lr_patience=2, early_stop_patience=4)

        result = train_model(1, model, objective, *views, SPEC, cfg, monitor)

        assert result.record.stopped_early
        assert len(result.record.epochs) == 5  # noqa: PLR2004
        assert result.record.best_epoch == 1
        monitor.early_stopped.assert_called_once_with(1, 5)
        monitor.lr_reduced.assert_called()
        assert result.record.lr_trace[-1] < result.record.lr_trace[0]

    @pytest.mark.parametrize("outcome", [(math.nan, None), (math.inf, None)])
    def test_divergence_raises(
        self,
        model: ModelBundle,
        views: tuple[TrainingView, TrainingView],
        outcome: tuple[float, None],
    ) -> None:
        """Test that non-finite batch losses abort the phase."""
        objective = MagicMock(spec=Objective)
        objective.loss.return_value = outcome

        with pytest.raises(TrainingDivergedError, match="Phase 2 diverged at epoch 1"):
            train_model(2, model, objective, *views, SPEC, TrainConfig(epochs=2), SilentTrainingMonitor())
