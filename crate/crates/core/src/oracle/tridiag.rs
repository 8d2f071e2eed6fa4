//! Thomas algorithm for tridiagonal systems.

/// Tridiagonal matrix with sub-diagonal `lower[i] = A[i][i-1]` (entry 0
/// unused), diagonal `diag`, and super-diagonal `upper[i] = A[i][i+1]`
/// (last entry unused).
#[derive(Debug, Clone)]
pub struct Tridiagonal {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(lower: Vec<f64>, diag: Vec<f64>, upper: Vec<f64>) -> Self {
        assert!(lower.len() == diag.len() && upper.len() == diag.len());
        Self { lower, diag, upper }
    }

    /// Constant-coefficient symmetric matrix `off, diag, off`.
    pub fn toeplitz(n: usize, diag: f64, off: f64) -> Self {
        Self::new(vec![off; n], vec![diag; n], vec![off; n])
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// `A x` written into `out`.
    pub fn apply(&self, x: &[f64], out: &mut [f64]) {
        let n = self.len();
        for i in 0..n {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v += self.lower[i] * x[i - 1];
            }
            if i + 1 < n {
                v += self.upper[i] * x[i + 1];
            }
            out[i] = v;
        }
    }

    /// Forward-elimination coefficients, reusable across right-hand sides.
    /// Assumes the matrix is diagonally dominant (no pivoting).
    pub fn factor(&self) -> ThomasFactor {
        let n = self.len();
        let mut c = vec![0.0; n];
        let mut inv = vec![0.0; n];
        let mut denom = self.diag[0];
        inv[0] = 1.0 / denom;
        c[0] = self.upper[0] * inv[0];
        for i in 1..n {
            denom = self.diag[i] - self.lower[i] * c[i - 1];
            inv[i] = 1.0 / denom;
            c[i] = self.upper[i] * inv[i];
        }
        ThomasFactor {
            lower: self.lower.clone(),
            c,
            inv,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ThomasFactor {
    lower: Vec<f64>,
    c: Vec<f64>,
    inv: Vec<f64>,
}

impl ThomasFactor {
    /// Overwrites `rhs` with the solution.
    pub fn solve_in_place(&self, rhs: &mut [f64]) {
        let n = rhs.len();
        debug_assert_eq!(n, self.c.len());
        rhs[0] *= self.inv[0];
        for i in 1..n {
            rhs[i] = (rhs[i] - self.lower[i] * rhs[i - 1]) * self.inv[i];
        }
        for i in (0..n - 1).rev() {
            rhs[i] -= self.c[i] * rhs[i + 1];
        }
    }
}
