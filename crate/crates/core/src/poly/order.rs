use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Monomials are first compared by grevlex on the `elim` variables only,
    /// ties are broken by grevlex on the remaining variables.
    Block {
        elim: Vec<usize>,
    },
}

/// A term order on the monomials of a fixed ring.
///
/// `precedence` lists variable indices from highest to lowest; an empty list
/// means declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: Vec::new(),
        }
    }

    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            precedence: Vec::new(),
        }
    }

    /// Elimination order ranking any monomial involving a variable of `elim`
    /// above every monomial free of them.
    pub fn block(elim: &[usize]) -> Self {
        let mut elim = elim.to_vec();
        elim.sort_unstable();
        elim.dedup();
        MonomialOrder {
            kind: OrderKind::Block { elim },
            precedence: Vec::new(),
        }
    }

    pub fn with_precedence(mut self, precedence: Vec<usize>) -> Self {
        self.precedence = precedence;
        self
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    /// Variables eliminated by this order (empty unless it is a block order).
    pub fn elim_vars(&self) -> &[usize] {
        match &self.kind {
            OrderKind::Block { elim } => elim,
            _ => &[],
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        debug_assert_eq!(a.len(), b.len());
        match &self.kind {
            OrderKind::Lex => {
                if self.precedence.is_empty() {
                    a.cmp(b)
                } else {
                    for &i in &self.precedence {
                        match a[i].cmp(&b[i]) {
                            Ordering::Equal => continue,
                            o => return o,
                        }
                    }
                    Ordering::Equal
                }
            }
            OrderKind::Grevlex => self.grevlex_on(a, b, |_| true),
            OrderKind::Block { elim } => self
                .grevlex_on(a, b, |i| elim.binary_search(&i).is_ok())
                .then_with(|| self.grevlex_on(a, b, |i| elim.binary_search(&i).is_err())),
        }
    }

    fn grevlex_on(&self, a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
        let n = a.len();
        let mut da = 0u64;
        let mut db = 0u64;
        for i in 0..n {
            if keep(i) {
                da += a[i] as u64;
                db += b[i] as u64;
            }
        }
        if da != db {
            return da.cmp(&db);
        }
        // the smaller exponent in the last variable wins
        let check = |i: usize| -> Option<Ordering> {
            if keep(i) && a[i] != b[i] {
                Some(b[i].cmp(&a[i]))
            } else {
                None
            }
        };
        if self.precedence.is_empty() {
            for i in (0..n).rev() {
                if let Some(o) = check(i) {
                    return o;
                }
            }
        } else {
            for &i in self.precedence.iter().rev() {
                if let Some(o) = check(i) {
                    return o;
                }
            }
        }
        Ordering::Equal
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrderKind::Lex => write!(f, "lex")?,
            OrderKind::Grevlex => write!(f, "grevlex")?,
            OrderKind::Block { elim } => {
                let list: Vec<String> = elim.iter().map(|i| i.to_string()).collect();
                write!(f, "block({})", list.join(","))?
            }
        }
        if !self.precedence.is_empty() {
            let list: Vec<String> = self.precedence.iter().map(|i| i.to_string()).collect();
            write!(f, "[{}]", list.join(","))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let bad = || crate::Error::Input(format!("unknown monomial order `{s}`"));
        let (head, prec) = match s.find('[') {
            Some(i) => {
                let inner = s[i..]
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(bad)?;
                (&s[..i], parse_index_list(inner).ok_or_else(bad)?)
            }
            None => (s, Vec::new()),
        };
        let order = match head {
            "lex" => MonomialOrder::lex(),
            "grevlex" => MonomialOrder::grevlex(),
            _ => {
                let inner = head
                    .strip_prefix("block(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(bad)?;
                MonomialOrder::block(&parse_index_list(inner).ok_or_else(bad)?)
            }
        };
        Ok(order.with_precedence(prec))
    }
}

fn parse_index_list(s: &str) -> Option<Vec<usize>> {
    if s.trim().is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse().ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_and_grevlex_basics() {
        let lex = MonomialOrder::lex();
        assert_eq!(lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let gr = MonomialOrder::grevlex();
        assert_eq!(gr.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
        // x^2 z vs x y^2 in 3 vars: same degree, last variable decides
        assert_eq!(gr.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn block_ranks_elimination_variables_first() {
        let ord = MonomialOrder::block(&[2]);
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[9, 9, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn precedence_reorders_lex() {
        let ord = MonomialOrder::lex().with_precedence(vec![1, 0]);
        assert_eq!(ord.cmp(&m(&[3, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn display_round_trips() {
        for o in [
            MonomialOrder::lex(),
            MonomialOrder::grevlex(),
            MonomialOrder::block(&[3, 1]),
            MonomialOrder::grevlex().with_precedence(vec![2, 0, 1]),
        ] {
            let s = o.to_string();
            assert_eq!(s.parse::<MonomialOrder>().unwrap(), o, "{s}");
        }
    }
}
