use std::fmt;
use std::str::FromStr;

/// Trisection parameters. `b = 0` encodes a closed `(g, k)` trisection, in
/// which case `p` must be zero; `b ≥ 1` is a relative `(g, k; p, b)` one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramParams {
    pub g: usize,
    pub k: usize,
    pub p: usize,
    pub b: usize,
}

impl DiagramParams {
    pub fn closed(g: usize, k: usize) -> Self {
        Self { g, k, p: 0, b: 0 }
    }

    pub fn relative(g: usize, k: usize, p: usize, b: usize) -> Self {
        Self { g, k, p, b }
    }

    pub fn is_closed(&self) -> bool {
        self.b == 0
    }

    /// Number of curves in each family: `g` closed, `g − p` relative.
    pub fn family_size(&self) -> usize {
        self.g.saturating_sub(self.p)
    }

    /// `n = k − 2p − b + 1`, the number of extra `S¹×S²` summands in the
    /// sutured splitting of each double intersection (relative only).
    pub fn extra_handles(&self) -> Option<i64> {
        (!self.is_closed()).then(|| self.k as i64 - 2 * self.p as i64 - self.b as i64 + 1)
    }

    /// Checks `0 ≤ k ≤ g` (closed) or `2p + b − 1 ≤ k ≤ g + p + b − 1` (relative).
    pub fn check_window(&self) -> Result<(), String> {
        if self.is_closed() {
            if self.p != 0 {
                return Err(format!("closed parameters must have p = 0, got p = {}", self.p));
            }
            if self.k > self.g {
                return Err(format!("closed window 0 ≤ k ≤ g fails: k = {} > g = {}", self.k, self.g));
            }
            return Ok(());
        }
        let lower = 2 * self.p + self.b - 1;
        let upper = self.g + self.p + self.b - 1;
        if self.k < lower || self.k > upper {
            return Err(format!(
                "window 2p+b-1 ≤ k ≤ g+p+b-1 fails: need {lower} ≤ k ≤ {upper}, got k = {}",
                self.k
            ));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check_window().is_ok()
    }

    /// Euler characteristic of the trisected manifold: `2 + g − 3k` closed,
    /// `g − 3k + 3p + 2b − 1` relative.
    pub fn euler_characteristic(&self) -> i64 {
        let (g, k, p, b) = (self.g as i64, self.k as i64, self.p as i64, self.b as i64);
        if self.is_closed() {
            2 + g - 3 * k
        } else {
            g - 3 * k + 3 * p + 2 * b - 1
        }
    }

    /// Signed coordinates, for delta arithmetic.
    pub fn as_signed(&self) -> [i64; 4] {
        [self.g as i64, self.k as i64, self.p as i64, self.b as i64]
    }

    /// Inverse of [`as_signed`](Self::as_signed); `None` if any entry is negative.
    pub fn from_signed(v: [i64; 4]) -> Option<Self> {
        let conv = |x: i64| usize::try_from(x).ok();
        Some(Self {
            g: conv(v[0])?,
            k: conv(v[1])?,
            p: conv(v[2])?,
            b: conv(v[3])?,
        })
    }
}

impl fmt::Display for DiagramParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_closed() {
            write!(f, "({},{})", self.g, self.k)
        } else {
            write!(f, "({},{};{},{})", self.g, self.k, self.p, self.b)
        }
    }
}

/// Parses `g,k,p,b`, `g,k` (closed), or the display form `(g,k;p,b)`.
impl FromStr for DiagramParams {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s
            .chars()
            .map(|c| if c == ';' { ',' } else { c })
            .filter(|c| !matches!(c, '(' | ')') && !c.is_whitespace())
            .collect();
        let parts = cleaned
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|e| format!("bad parameter {t:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        match parts[..] {
            [g, k] => Ok(Self::closed(g, k)),
            [g, k, p, b] => Ok(Self::relative(g, k, p, b)),
            _ => Err(format!("expected 2 or 4 parameters, got {}", parts.len())),
        }
    }
}
