use crate::epositivity::EExpansion;
use crate::error::Error;
use crate::ring::BivarPoly;
use crate::symfunc::Partition;
use crate::Result;

/// The manifestly positive tableau expansion of `B_a e_mu` at `q -> 1+q`.
///
/// `e_mu` is drawn as a juxtaposition of columns of heights `mu_i`. A
/// surviving labeled object picks, in each column independently, a top run of
/// `j_i >= 0` cells; when `j_i >= 1` the topmost chosen cell is inscribed `q`
/// and each remaining chosen cell carries `1` or `q` freely. The object
/// contributes `(product of inscriptions) * e_{a + sum j} * e_{columns left}`.
/// Summing these weights equals `shift_and_e_expand(B_a e_mu)`: the signed
/// objects with `-1` entries at column tops cancel in pairs under the
/// top-entry sign flip, and the `q -> 1+q` substitution turns each chosen
/// non-top cell into the free `1`-or-`q` choice.
pub fn b_positive_tableaux(a: u32, mu: &Partition) -> Result<EExpansion> {
    if a < 1 {
        return Err(Error::NegativeArg("operator index must be at least 1"));
    }
    if mu.size() + a > 8 {
        return Err(Error::BoundExceeded {
            what: "b_positive_tableaux a+|mu|",
            got: (mu.size() + a) as i64,
            max: 8,
        });
    }
    let cols = mu.parts();
    let mut out = EExpansion::new();
    // iterate over per-column chosen-run lengths j_i <= mu_i
    let mut js = vec![0u32; cols.len()];
    loop {
        // weight of this choice vector: product over columns with j >= 1 of
        // q * (1+q)^{j-1}, expanded object by object
        let mut weight = BivarPoly::one();
        let mut removed = 0u32;
        for (i, &j) in js.iter().enumerate() {
            let _ = i;
            removed += j;
            if j >= 1 {
                weight = weight * BivarPoly::q() * BivarPoly::one_plus_q().pow(j - 1);
            }
        }
        let mut parts: Vec<u32> = vec![a + removed];
        for (i, &j) in js.iter().enumerate() {
            let left = cols[i] - j;
            if left > 0 {
                parts.push(left);
            }
        }
        out.add_term(
            Partition::from_unsorted(parts).expect("positive parts"),
            weight,
        );
        // advance the odometer
        let mut i = 0;
        loop {
            if i == js.len() {
                return Ok(out);
            }
            if js[i] < cols[i] {
                js[i] += 1;
                break;
            }
            js[i] = 0;
            i += 1;
        }
    }
}
