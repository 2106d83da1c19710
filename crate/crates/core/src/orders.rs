//! Degree-compatible monomial orders on standard monomials and module orders
//! on `(component, exponent)` pairs.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::algebra::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("unknown order `{0}` (expected deglex or degrevlex, optionally top:/pot:)")]
    UnknownOrder(String),
    #[error("order `{0}` is not degree compatible")]
    NotDegreeCompatible(String),
    #[error("priority must be a permutation of 0..{0}")]
    BadPriority(usize),
    #[error("unknown variable `{0}` in priority")]
    UnknownVariable(String),
    #[error("exponent lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("component {0} out of range for rank {1}")]
    ComponentOutOfRange(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegLex,
    DegRevLex,
}

/// A degree-compatible order. `priority[0]` is the most significant
/// variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

fn check_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self, OrderError> {
        if !check_permutation(&priority) {
            return Err(OrderError::BadPriority(priority.len()));
        }
        Ok(MonomialOrder { kind, priority })
    }

    pub fn deglex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::DegLex, priority: (0..n).collect() }
    }

    pub fn degrevlex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, priority: (0..n).collect() }
    }

    /// Parses `deglex`, `degrevlex`, optionally followed by `:a>b>...`.
    /// Named variables lead the priority in the given sequence; the rest
    /// follow in declaration order.
    pub fn parse(text: &str, var_names: &[String]) -> Result<Self, OrderError> {
        let (name, suffix) = match text.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b)),
            None => (text.trim(), None),
        };
        let kind = match name {
            "deglex" => OrderKind::DegLex,
            "degrevlex" => OrderKind::DegRevLex,
            "lex" | "revlex" => return Err(OrderError::NotDegreeCompatible(name.to_string())),
            _ => return Err(OrderError::UnknownOrder(text.to_string())),
        };
        let mut priority = Vec::new();
        if let Some(suffix) = suffix {
            for v in suffix.split('>').map(str::trim) {
                let idx = var_names
                    .iter()
                    .position(|n| n == v)
                    .ok_or_else(|| OrderError::UnknownVariable(v.to_string()))?;
                if priority.contains(&idx) {
                    return Err(OrderError::BadPriority(var_names.len()));
                }
                priority.push(idx);
            }
        }
        for v in 0..var_names.len() {
            if !priority.contains(&v) {
                priority.push(v);
            }
        }
        Self::new(kind, priority)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn try_compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering, OrderError> {
        if a.len() != b.len() || a.len() != self.priority.len() {
            return Err(OrderError::LengthMismatch(a.len(), b.len()));
        }
        Ok(self.compare(a, b))
    }

    /// Panics if the lengths differ; see [`Self::try_compare`].
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Ordering {
        let (ea, eb) = (a.entries(), b.entries());
        assert_eq!(ea.len(), eb.len(), "exponent length mismatch");
        let by_degree = a.degree().cmp(&b.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        match self.kind {
            OrderKind::DegLex => {
                for &v in &self.priority {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
            }
            OrderKind::DegRevLex => {
                for &v in self.priority.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        };
        f.write_str(name)?;
        if self.priority.iter().enumerate().any(|(i, &v)| i != v) {
            let p: Vec<String> = self.priority.iter().map(|v| format!("#{v}")).collect();
            write!(f, ":{}", p.join(">"))?;
        }
        Ok(())
    }
}

/// Order on the monomials of `Gr(A)`: comparison data is inherited
/// unchanged, since `eta(x^a)` and `x^a` are indexed by the same exponent.
pub fn induce_graded_order(order: &MonomialOrder) -> MonomialOrder {
    order.clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleScheme {
    /// Term over position: degree, base order, then component.
    Top,
    /// Degree, then component, then base order.
    Pot,
}

/// Order on `x^a e_i` in `A^m`. Components are 0-based;
/// `component_priority[0]` is the greatest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    base: MonomialOrder,
    scheme: ModuleScheme,
    component_priority: Vec<usize>,
}

impl ModuleOrder {
    pub fn new(
        base: MonomialOrder,
        scheme: ModuleScheme,
        component_priority: Vec<usize>,
    ) -> Result<Self, OrderError> {
        if !check_permutation(&component_priority) {
            return Err(OrderError::BadPriority(component_priority.len()));
        }
        Ok(ModuleOrder { base, scheme, component_priority })
    }

    pub fn top(base: MonomialOrder, rank: usize) -> Self {
        ModuleOrder { base, scheme: ModuleScheme::Top, component_priority: (0..rank).collect() }
    }

    pub fn pot(base: MonomialOrder, rank: usize) -> Self {
        ModuleOrder { base, scheme: ModuleScheme::Pot, component_priority: (0..rank).collect() }
    }

    /// Parses `top:<base>` or `pot:<base>`.
    pub fn parse(text: &str, var_names: &[String], rank: usize) -> Result<Self, OrderError> {
        let (scheme, rest) = text
            .split_once(':')
            .ok_or_else(|| OrderError::UnknownOrder(text.to_string()))?;
        let scheme = match scheme.trim() {
            "top" => ModuleScheme::Top,
            "pot" => ModuleScheme::Pot,
            _ => return Err(OrderError::UnknownOrder(text.to_string())),
        };
        let base = MonomialOrder::parse(rest, var_names)?;
        Self::new(base, scheme, (0..rank).collect())
    }

    pub fn base(&self) -> &MonomialOrder {
        &self.base
    }

    pub fn scheme(&self) -> ModuleScheme {
        self.scheme
    }

    pub fn rank(&self) -> usize {
        self.component_priority.len()
    }

    fn component_rank(&self, c: usize) -> usize {
        self.component_priority.iter().position(|&v| v == c).expect("component in range")
    }

    fn compare_components(&self, i: usize, j: usize) -> Ordering {
        // earlier in the priority list is greater
        self.component_rank(j).cmp(&self.component_rank(i))
    }

    pub fn try_compare(
        &self,
        x: (usize, &Exponent),
        y: (usize, &Exponent),
    ) -> Result<Ordering, OrderError> {
        let m = self.rank();
        for c in [x.0, y.0] {
            if c >= m {
                return Err(OrderError::ComponentOutOfRange(c, m));
            }
        }
        if x.1.len() != y.1.len() {
            return Err(OrderError::LengthMismatch(x.1.len(), y.1.len()));
        }
        Ok(self.compare(x, y))
    }

    pub fn compare(&self, x: (usize, &Exponent), y: (usize, &Exponent)) -> Ordering {
        match self.scheme {
            ModuleScheme::Top => self
                .base
                .compare(x.1, y.1)
                .then_with(|| self.compare_components(x.0, y.0)),
            ModuleScheme::Pot => x
                .1
                .degree()
                .cmp(&y.1.degree())
                .then_with(|| self.compare_components(x.0, y.0))
                .then_with(|| self.base.compare(x.1, y.1)),
        }
    }
}

impl fmt::Display for ModuleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.scheme {
            ModuleScheme::Top => "top",
            ModuleScheme::Pot => "pot",
        };
        write!(f, "{s}:{}", self.base)
    }
}

pub fn induce_graded_module_order(order: &ModuleOrder) -> ModuleOrder {
    order.clone()
}
