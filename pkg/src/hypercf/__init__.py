"""Hyperbola lattice-point structure for odd moduli and a continued-fraction
factoring attack, with a toy RSA harness and the Wiener baseline."""

from .attack import (
    AttackConfig,
    AttackResult,
    AttackStatus,
    DeltaCandidate,
    DeltaVariant,
    attack,
    delta_schedule,
    delta_window,
    p4_ratio,
    recover_private_key,
    test_delta,
)
from .confrac import (
    ContinuedFraction,
    Convergent,
    cf_expand,
    convergent_stream,
    convergents,
    make_rational,
    rat_add,
)
from .curve import (
    ConjectureReport,
    Factorization,
    Point,
    add_points,
    alpha_from_point,
    check_conjecture,
    enumerate_points,
    is_on_curve,
    point_from_alpha,
    points_from_prime_alphas,
    power_identity_delta,
    ratio_of_point,
    scalar_orthogonality,
    split_ratio,
    verify_ps_system,
)
from .parallel import ShardPlan, parallel_attack
from .rsa import RsaKeyPair, decrypt, encrypt, keygen, small_d_bound, wiener_attack

__version__ = "0.1.0"

__all__ = [
    "AttackConfig",
    "AttackResult",
    "AttackStatus",
    "ConjectureReport",
    "ContinuedFraction",
    "Convergent",
    "DeltaCandidate",
    "DeltaVariant",
    "Factorization",
    "Point",
    "RsaKeyPair",
    "ShardPlan",
    "add_points",
    "alpha_from_point",
    "attack",
    "cf_expand",
    "check_conjecture",
    "convergent_stream",
    "convergents",
    "decrypt",
    "delta_schedule",
    "delta_window",
    "encrypt",
    "enumerate_points",
    "is_on_curve",
    "keygen",
    "make_rational",
    "p4_ratio",
    "parallel_attack",
    "point_from_alpha",
    "points_from_prime_alphas",
    "power_identity_delta",
    "rat_add",
    "ratio_of_point",
    "recover_private_key",
    "scalar_orthogonality",
    "small_d_bound",
    "split_ratio",
    "test_delta",
    "verify_ps_system",
    "wiener_attack",
]
