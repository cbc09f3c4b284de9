import numpy as np

from cfm.matrix import MatrixF
from cfm.scalar import COMPLEX, QUATERNION, REAL, Scalar

FIELDS = [REAL, COMPLEX, QUATERNION]


def q(a=0.0, b=0.0, c=0.0, e=0.0):
    return Scalar(a, b, c, e, QUATERNION)


def cx(z):
    z = complex(z)
    return Scalar(z.real, z.imag, tag=COMPLEX)


def random_matrix(rng, rows, cols, field):
    data = np.zeros((rows, cols, 4))
    data[..., :field.d] = rng.standard_normal((rows, cols, field.d))
    return MatrixF(data, field)


def complex_adjoint(M):
    """2n x 2m complex matrix representing a quaternion matrix.

    ``a + b i + c j + e k = z1 + z2 j`` with ``z1 = a + b i``, ``z2 = c + e i``.
    """
    d = M.data
    z1 = d[..., 0] + 1j * d[..., 1]
    z2 = d[..., 2] + 1j * d[..., 3]
    return np.block([[z1, z2], [-z2.conj(), z1.conj()]])


def oracle_rank(M, tol=1e-9):
    """Rank through numpy SVD; quaternion rank is half the rank of the adjoint."""
    if M.field is QUATERNION:
        return np.linalg.matrix_rank(complex_adjoint(M), tol=tol) // 2
    return int(np.linalg.matrix_rank(M.to_complex(), tol=tol)) if M.rows and M.cols else 0
