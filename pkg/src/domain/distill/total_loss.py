from src.domain.distill.kd_config import KdConfig


def total_loss_coefficients(cfg: KdConfig) -> tuple[float, float, float]:
    """Multipliers (c_bce, c_fkd, c_ckd) of L_total = (1−α−β)·L_BCE + α·γ·L_F-KD + β·L_C-KD."""
    return (1.0 - cfg.alpha - cfg.beta, cfg.alpha * cfg.gamma, cfg.beta)


def total_loss(l_bce: float, l_fkd: float, l_ckd: float, cfg: KdConfig) -> float:
    c_bce, c_fkd, c_ckd = total_loss_coefficients(cfg)
    return c_bce * l_bce + c_fkd * l_fkd + c_ckd * l_ckd
