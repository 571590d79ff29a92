use num_traits::Zero;

use super::Rat;

/// Rank of a rational matrix given by rows, by exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &prow[col];
            for k in col..ncols {
                if !prow[k].is_zero() {
                    let d = &factor * &prow[k];
                    row[k] -= d;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(m(&[&[1, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])), 3);
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 0]])), 0);
        assert_eq!(rank(Vec::new()), 0);
        assert_eq!(
            rank(vec![vec![rat(1, 3), rat(1, 2)], vec![int(2), int(3)]]),
            1
        );
        assert_eq!(rank(m(&[&[0, 1, 1], &[0, 1, 2], &[0, 2, 3]])), 2);
    }
}
