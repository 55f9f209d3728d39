//! Static display metadata for the classification of height-2 nilpotent
//! orbits: partition / Bala-Carter labels and the Hermitian pair, keyed by
//! (type, weighted diagram). Used only for display and as the expectation
//! table of the catalogue acceptance test; the engine never computes from it.

use crate::root_system::TypeLetter;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    /// Row tag in the classification table, e.g. "3.2".
    pub family: &'static str,
    /// Weighted Dynkin diagram labels.
    pub diagram: Vec<i64>,
    /// Partition or Bala-Carter label (display only).
    pub label: String,
    /// The Hermitian symmetric pair G_0/L (display only).
    pub g0: String,
    /// rk(a), the rank of the abelian ideal.
    pub rank: usize,
}

fn one_at(n: usize, pos: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[pos] = 1;
    v
}

/// All classification rows for the given type and rank.
pub fn rows(letter: TypeLetter, n: usize) -> Vec<Table1Row> {
    let mut out = Vec::new();
    match letter {
        TypeLetter::A => {
            for r in 1..=n / 2 {
                let l = n - 2 * r;
                let mut d = vec![0i64; n];
                d[r - 1] = 1;
                d[n - r] = 1;
                out.push(Table1Row {
                    family: "1.1",
                    diagram: d,
                    label: format!("(2^{r}, 1^{})", l + 1),
                    g0: format!("(A{}, alpha{r})", 2 * r - 1),
                    rank: r,
                });
            }
            if n % 2 == 1 {
                let r = (n + 1) / 2;
                let mut d = vec![0i64; n];
                d[r - 1] = 2;
                out.push(Table1Row {
                    family: "1.2",
                    diagram: d,
                    label: format!("(2^{r})"),
                    g0: format!("(A{}, alpha{r})", 2 * r - 1),
                    rank: r,
                });
            }
        }
        TypeLetter::B => {
            let mut d = vec![0i64; n];
            d[0] = 2;
            out.push(Table1Row {
                family: "2.1",
                diagram: d,
                label: format!("(3, 1^{})", 2 * (n - 1)),
                g0: format!("(B{n}, alpha1)"),
                rank: 2,
            });
            for r in 1..=n / 2 {
                let l = n - 2 * r;
                out.push(Table1Row {
                    family: "2.2",
                    diagram: one_at(n, 2 * r - 1),
                    label: format!("(2^{}, 1^{})", 2 * r, 2 * l + 1),
                    g0: format!("(D{}, alpha{})", 2 * r, 2 * r),
                    rank: r,
                });
            }
        }
        TypeLetter::C => {
            for r in 1..=n - 1 {
                let l = n - r - 1;
                out.push(Table1Row {
                    family: "3.1",
                    diagram: one_at(n, r - 1),
                    label: format!("(2^{r}, 1^{})", 2 * l + 2),
                    g0: format!("(C{r}, alpha{r})"),
                    rank: r,
                });
            }
            let mut d = vec![0i64; n];
            d[n - 1] = 2;
            out.push(Table1Row {
                family: "3.2",
                diagram: d,
                label: format!("(2^{n})"),
                g0: format!("(C{n}, alpha{n})"),
                rank: n,
            });
        }
        TypeLetter::D => {
            let mut d = vec![0i64; n];
            d[0] = 2;
            out.push(Table1Row {
                family: "4.1",
                diagram: d,
                label: format!("(3, 1^{})", 2 * n - 1),
                g0: format!("(D{n}, alpha1)"),
                rank: 2,
            });
            for r in 1..=(n.saturating_sub(2)) / 2 {
                let l = n - 2 * r - 2;
                out.push(Table1Row {
                    family: "4.2",
                    diagram: one_at(n, 2 * r - 1),
                    label: format!("(2^{}, 1^{})", 2 * r, 2 * l + 4),
                    g0: format!("(D{}, alpha{})", 2 * r, 2 * r),
                    rank: r,
                });
            }
            if n % 2 == 1 {
                let r = (n - 1) / 2;
                let mut d = vec![0i64; n];
                d[n - 2] = 1;
                d[n - 1] = 1;
                out.push(Table1Row {
                    family: "4.3",
                    diagram: d,
                    label: format!("(2^{}, 1^2)", 2 * r),
                    g0: format!("(D{}, alpha{})", 2 * r, 2 * r),
                    rank: r,
                });
            } else {
                let r = n / 2;
                let mut d = vec![0i64; n];
                d[n - 1] = 2;
                out.push(Table1Row {
                    family: "4.4",
                    diagram: d,
                    label: format!("(2^{})^I", 2 * r),
                    g0: format!("(D{}, alpha{})", 2 * r, 2 * r),
                    rank: r,
                });
                let mut d = vec![0i64; n];
                d[n - 2] = 2;
                out.push(Table1Row {
                    family: "4.5",
                    diagram: d,
                    label: format!("(2^{})^II", 2 * r),
                    g0: format!("(D{}, alpha{})", 2 * r, 2 * r),
                    rank: r,
                });
            }
        }
        TypeLetter::E => match n {
            6 => {
                out.push(Table1Row {
                    family: "5.1",
                    diagram: vec![0, 1, 0, 0, 0, 0],
                    label: "A1".to_string(),
                    g0: "(A1, alpha1)".to_string(),
                    rank: 1,
                });
                out.push(Table1Row {
                    family: "5.2",
                    diagram: vec![1, 0, 0, 0, 0, 1],
                    label: "2A1".to_string(),
                    g0: "(D5, alpha1)".to_string(),
                    rank: 2,
                });
            }
            7 => {
                out.push(Table1Row {
                    family: "6.1",
                    diagram: vec![1, 0, 0, 0, 0, 0, 0],
                    label: "A1".to_string(),
                    g0: "(A1, alpha1)".to_string(),
                    rank: 1,
                });
                out.push(Table1Row {
                    family: "6.2",
                    diagram: vec![0, 0, 0, 0, 0, 1, 0],
                    label: "2A1".to_string(),
                    g0: "(D6, alpha1)".to_string(),
                    rank: 2,
                });
                out.push(Table1Row {
                    family: "6.3",
                    diagram: vec![0, 0, 0, 0, 0, 0, 2],
                    label: "3A1''".to_string(),
                    g0: "(E7, alpha7)".to_string(),
                    rank: 3,
                });
            }
            8 => {
                out.push(Table1Row {
                    family: "7.1",
                    diagram: vec![0, 0, 0, 0, 0, 0, 0, 1],
                    label: "A1".to_string(),
                    g0: "(A1, alpha1)".to_string(),
                    rank: 1,
                });
                out.push(Table1Row {
                    family: "7.2",
                    diagram: vec![1, 0, 0, 0, 0, 0, 0, 0],
                    label: "2A1".to_string(),
                    g0: "(D8, alpha1)".to_string(),
                    rank: 2,
                });
            }
            _ => {}
        },
        TypeLetter::F => {
            out.push(Table1Row {
                family: "8.1",
                diagram: vec![1, 0, 0, 0],
                label: "A1".to_string(),
                g0: "(A1, alpha1)".to_string(),
                rank: 1,
            });
            out.push(Table1Row {
                family: "8.2",
                diagram: vec![0, 0, 0, 1],
                label: "~A1".to_string(),
                g0: "(B4, alpha1)".to_string(),
                rank: 2,
            });
        }
        TypeLetter::G => {
            out.push(Table1Row {
                family: "9.1",
                diagram: vec![0, 1],
                label: "A1".to_string(),
                g0: "(A1, alpha1)".to_string(),
                rank: 1,
            });
        }
    }
    out.sort_by(|a, b| a.diagram.cmp(&b.diagram));
    out
}

/// Looks up the display row matching a computed diagram.
pub fn lookup(letter: TypeLetter, n: usize, diagram: &[i64]) -> Option<Table1Row> {
    rows(letter, n).into_iter().find(|r| r.diagram == diagram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_type_rows() {
        let a2 = rows(TypeLetter::A, 2);
        assert_eq!(a2.len(), 1);
        assert_eq!(a2[0].diagram, vec![1, 1]);
        assert_eq!(a2[0].rank, 1);

        let b3 = rows(TypeLetter::B, 3);
        assert_eq!(b3.len(), 2);

        let d4 = rows(TypeLetter::D, 4);
        assert_eq!(d4.len(), 4);

        let e7 = rows(TypeLetter::E, 7);
        assert_eq!(e7.len(), 3);
        assert!(e7.iter().any(|r| r.diagram == vec![0, 0, 0, 0, 0, 0, 2] && r.rank == 3));

        let g2 = rows(TypeLetter::G, 2);
        assert_eq!(g2.len(), 1);
        assert_eq!(g2[0].diagram, vec![0, 1]);
    }

    #[test]
    fn lookup_labels() {
        let row = lookup(TypeLetter::C, 3, &[0, 0, 2]).unwrap();
        assert_eq!(row.family, "3.2");
        assert_eq!(row.label, "(2^3)");
        assert!(lookup(TypeLetter::C, 3, &[2, 0, 0]).is_none());
    }
}
