import math

from pydantic import Field, model_validator

from .base import Branch, ValueModel


class BgrwaCoefficients(ValueModel):
    """
    n-independent coefficients of the biased generalized rotating-wave
    approximation. The n-dependent ones (G0, F1, eps_n, R_r) are methods of
    BgrwaService.

    Attributes:
        eta (float): exp(-2 g^2/omega^2) = G0(0).
        y (float): sqrt(epsilon^2 + delta^2 eta^2).
        u (float): sqrt((1 - epsilon/y)/2).
        v (float): sqrt((1 + epsilon/y)/2).
        tunneling_sign (int): Sign of delta, carried by the u component of the
            dressed qubit states.
    """

    eta: float = Field(gt=0.0, le=1.0)
    y: float = Field(gt=0.0)
    u: float = Field(ge=0.0)
    v: float = Field(ge=0.0)
    tunneling_sign: int = 1

    @model_validator(mode="after")
    def check_spinor(self):
        if abs(self.u * self.u + self.v * self.v - 1.0) > 1e-12:
            raise ValueError("u^2 + v^2 must equal 1")
        return self

    @property
    def signed_u(self) -> float:
        return self.tunneling_sign * self.u


class BgrwaEigenstate(ValueModel):
    """
    Analytic eigenstate of the BGRWA Hamiltonian.

    Pair states live in the block {|e', n>, |g', n+1>} of the dressed qubit
    basis; `plus` is cos(theta/2)|e', n> + s sin(theta/2)|g', n+1> and `minus`
    is sin(theta/2)|e', n> - s cos(theta/2)|g', n+1>, with s the sign of the
    block coupling R_r. The ground state is |g', 0>; its theta and delta_gap
    are unused.

    Attributes:
        n (int): Pair index.
        branch (Branch): plus, minus or ground.
        theta (float): Mixing angle in [0, pi].
        delta_gap (float): Diagonal difference of the 2x2 block.
        coupling_sign (int): Sign s of the block off-diagonal.
        energy (float): Eigenvalue, in the units of the parameters.
    """

    n: int = Field(ge=0)
    branch: Branch
    theta: float = 0.0
    delta_gap: float = 0.0
    coupling_sign: int = 1
    energy: float

    @model_validator(mode="after")
    def check_theta(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError("theta must lie in [0, pi]")
        return self

    def pair_weights(self) -> tuple:
        """Weights of (|e', n>, |g', n+1>)."""
        half = 0.5 * self.theta
        s = self.coupling_sign
        if self.branch is Branch.PLUS:
            return math.cos(half), s * math.sin(half)
        return math.sin(half), -s * math.cos(half)
