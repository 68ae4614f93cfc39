import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.special import logit

from src.domain.distill.errors import DistillShapeMismatchError
from src.domain.distill.errors import InvalidTemperatureError
from src.domain.distill.kd_config import KdConfig
from src.domain.distill.kd_config import KlVariant
from src.domain.distill.logits_kd import logits_kd
from src.domain.distill.total_loss import total_loss
from src.domain.distill.total_loss import total_loss_coefficients


class TestLogitsKd:
    """Test logits_kd() for both divergence variants."""

    @pytest.mark.parametrize("variant", list(KlVariant))
    def test_equal_logits_give_zero(self, variant: KlVariant, rng: np.random.Generator) -> None:
        """Test that a student matching its teacher pays nothing."""
        logits = rng.normal(size=(4, 3))

        result = logits_kd(logits, logits.copy(), temperature=3.0, variant=variant)

        assert result.value == pytest.approx(0.0, abs=1e-12)

    def test_full_binary_example(self) -> None:
        """Test p_t = 0.9, p_s = 0.5 against 0.9·ln 1.8 + 0.1·ln 0.2."""
        result = logits_kd(np.array([[0.0]]), np.array([[logit(0.9)]]), temperature=1.0)

        expected = 0.9 * math.log(1.8) + 0.1 * math.log(0.2)
        assert result.value == pytest.approx(expected, abs=1e-9)
        assert result.value == pytest.approx(0.36807, abs=1e-5)

    def test_literal_variant_can_go_negative(self) -> None:
        """Test p_t = 0.5, p_s = 0.9 for the one-term form."""
        result = logits_kd(
            np.array([[logit(0.9)]]), np.array([[0.0]]), temperature=1.0, variant=KlVariant.LITERAL
        )

        assert result.value == pytest.approx(-0.293893, abs=1e-6)

    def test_full_binary_is_nonnegative(self, rng: np.random.Generator) -> None:
        """Test nonnegativity on random logits."""
        for _ in range(20):
            value = logits_kd(rng.normal(scale=4, size=(5, 6)), rng.normal(scale=4, size=(5, 6)), 3.0).value
            assert value >= 0.0

    @pytest.mark.parametrize("variant", list(KlVariant))
    def test_gradient_matches_finite_differences(
        self, variant: KlVariant, rng: np.random.Generator
    ) -> None:
        """Test the student gradient against central differences."""
        zs = rng.normal(size=(3, 4))
        zt = rng.normal(size=(3, 4))
        step = 1e-6

        numeric = np.zeros_like(zs)
        for position in np.ndindex(zs.shape):
            plus, minus = zs.copy(), zs.copy()
            plus[position] += step
            minus[position] -= step
            numeric[position] = (
                logits_kd(plus, zt, 2.0, variant).value - logits_kd(minus, zt, 2.0, variant).value
            ) / (2 * step)

        np.testing.assert_allclose(logits_kd(zs, zt, 2.0, variant).grad, numeric, rtol=1e-5, atol=1e-9)

    def test_clamped_student_gets_no_gradient(self) -> None:
        """Test that saturated student probabilities are not pushed further."""
        result = logits_kd(np.array([[100.0, 0.0]]), np.array([[0.0, 1.0]]), temperature=1.0)

        assert result.grad[0, 0] == 0.0
        assert result.grad[0, 1] != 0.0
        assert math.isfinite(result.value)

    @pytest.mark.parametrize("temperature", [0.0, -1.0])
    def test_invalid_temperature_raises(self, temperature: float) -> None:
        """Test that the temperature must be positive."""
        with pytest.raises(InvalidTemperatureError):
            logits_kd(np.zeros((1, 2)), np.zeros((1, 2)), temperature)

    def test_shape_mismatch_raises(self) -> None:
        """Test that student and teacher logits must share a shape."""
        with pytest.raises(DistillShapeMismatchError):
            logits_kd(np.zeros((1, 2)), np.zeros((2, 2)), 1.0)


class TestTotalLoss:
    """Test the hybrid objective composition."""

    def test_default_composition(self) -> None:
        """Test (1 − α − β)·1 + α·γ·0.1 + β·0.5 with the defaults."""
        assert total_loss(1.0, 0.1, 0.5, KdConfig()) == pytest.approx(0.6 + 0.2 + 0.1)

    def test_no_distillation_is_plain_bce(self) -> None:
        """Test that α = β = 0 leaves only the BCE term."""
        cfg = KdConfig(alpha=0.0, beta=0.0)

        assert total_loss(0.7, 5.0, 9.0, cfg) == pytest.approx(0.7)
        assert total_loss_coefficients(cfg) == (1.0, 0.0, 0.0)

    def test_linear_in_each_term(self) -> None:
        """Test linearity in the three component losses."""
        cfg = KdConfig(alpha=0.3, beta=0.1, gamma=2.0)

        assert total_loss(2.0, 4.0, 6.0, cfg) == pytest.approx(2 * total_loss(1.0, 2.0, 3.0, cfg))

    @pytest.mark.parametrize(
        "overrides",
        [{"alpha": 0.6}, {"beta": -0.1}, {"gamma": 0.0}, {"temperature": 0.0}, {"delta": 1.0}],
    )
    def test_invalid_config_raises(self, overrides: dict[str, float]) -> None:
        """Test the KdConfig bounds."""
        with pytest.raises(ValidationError):
            KdConfig.model_validate(overrides)
