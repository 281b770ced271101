use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Shape of a monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Two grevlex blocks compared lexicographically; the first block is the
    /// elimination block.
    Block,
}

/// A monomial order together with a variable priority list.
///
/// Variables named in `priority` come first (highest first); every other
/// variable of the context follows in context order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<String>,
    /// Size of the first block for [`OrderKind::Block`].
    pub block: usize,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::grevlex()
    }
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: vec![],
            block: 0,
        }
    }

    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::GrevLex,
            priority: vec![],
            block: 0,
        }
    }

    /// Block order eliminating `drop`: any monomial involving `drop` is larger
    /// than every monomial free of it.
    pub fn elimination<S: AsRef<str>>(drop: &[S]) -> Self {
        MonomialOrder {
            kind: OrderKind::Block,
            priority: drop.iter().map(|s| s.as_ref().to_string()).collect(),
            block: drop.len(),
        }
    }

    pub fn with_priority<S: AsRef<str>>(mut self, priority: &[S]) -> Self {
        self.priority = priority.iter().map(|s| s.as_ref().to_string()).collect();
        self
    }

    /// Fixes the variable layout for a concrete context.
    pub fn resolve(&self, vars: &[String]) -> ResolvedOrder {
        let mut perm: Vec<usize> = Vec::with_capacity(vars.len());
        for name in &self.priority {
            if let Some(i) = vars.iter().position(|v| v == name) {
                if !perm.contains(&i) {
                    perm.push(i);
                }
            }
        }
        let block = match self.kind {
            OrderKind::Block => perm.len().min(self.block),
            _ => 0,
        };
        for i in 0..vars.len() {
            if !perm.contains(&i) {
                perm.push(i);
            }
        }
        ResolvedOrder {
            kind: self.kind,
            perm,
            block,
        }
    }
}

/// A monomial order bound to a context: `perm[k]` is the context index of the
/// variable at internal position `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedOrder {
    pub kind: OrderKind,
    pub perm: Vec<usize>,
    pub block: usize,
}

impl ResolvedOrder {
    /// Context exponents to internal layout.
    pub fn to_internal(&self, exps: &[u32]) -> Vec<u32> {
        self.perm.iter().map(|&i| exps[i]).collect()
    }

    /// Internal layout back to context exponents.
    pub fn to_context(&self, internal: &[u32]) -> Vec<u32> {
        let mut out = vec![0; internal.len()];
        for (k, &i) in self.perm.iter().enumerate() {
            out[i] = internal[k];
        }
        out
    }

    /// Compares two monomials given in internal layout.
    pub fn cmp_internal(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => a.cmp(b),
            OrderKind::GrevLex => grevlex(a, b),
            OrderKind::Block => {
                let k = self.block;
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// Compares two monomials given in context layout.
    pub fn cmp_context(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &i in &self.perm {
            // fast path for lex
            if self.kind == OrderKind::Lex {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            } else {
                break;
            }
        }
        if self.kind == OrderKind::Lex {
            return Ordering::Equal;
        }
        self.cmp_internal(&self.to_internal(a), &self.to_internal(b))
    }
}

pub(crate) fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
