//! Searches for ladder end caps: every small connected subcubic graph is
//! glued onto the end rung of a long ladder, and the caps that keep all
//! curvatures nonnegative are printed, one per rooted isomorphism class.
//!
//! Usage: cargo run --release -p ricci-core --example discover_caps [max_cap_vertices]

use std::collections::BTreeMap;

use ricci_core::canon::CanonicalForm;
use ricci_core::classify::rooted_form;
use ricci_core::curvature::{edge_curvature, is_nonneg_curved, Engine};
use ricci_core::enumerate::enumerate_subcubic;
use ricci_core::families::{attach_caps, EndForm};
use ricci_core::WeightScheme;

const CORE: usize = 8;

fn main() {
    let max_m: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let bare = EndForm { id: 0, vertices: 0, edges: vec![], attach: (None, None), ollivier_nonneg: true };
    let mut found: BTreeMap<CanonicalForm, EndForm> = BTreeMap::new();
    for m in 1..=max_m {
        let before = found.len();
        for h in enumerate_subcubic(m + 2) {
            for (p, q) in h.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]) {
                if h.degree(p) > 2 || h.degree(q) > 2 {
                    continue;
                }
                let rest: Vec<usize> = (0..h.n()).filter(|&z| z != p && z != q).collect();
                let idx = |z: usize| rest.iter().position(|&r| r == z);
                let other = |r: usize, s: usize| h.neighbors(r).find(|&z| z != s).and_then(idx);
                let (a, b) = (other(p, q), other(q, p));
                if let (Some(a), Some(b)) = (a, b) {
                    if a != b && h.has(rest[a], rest[b]) {
                        continue;
                    }
                }
                let edges: Vec<(usize, usize)> =
                    h.edges().into_iter().filter_map(|(u, v)| Some((idx(u)?, idx(v)?))).collect();
                let form = EndForm { id: 0, vertices: m, edges, attach: (a, b), ollivier_nonneg: false };
                let key = rooted_form(m, &form.edges, form.attach).min(rooted_form(m, &form.edges, (b, a)));
                if found.contains_key(&key) {
                    continue;
                }
                let g = attach_caps(CORE, &form, &bare, false).expect("subcubic");
                let dist = g.distances();
                if is_nonneg_curved(&g, &dist, Engine::Transport).unwrap() {
                    let gn = g.with_scheme(WeightScheme::Normalized);
                    let ollivier = g.edges().into_iter().all(|(u, v)| {
                        !num_traits::Signed::is_negative(
                            &edge_curvature(&gn, &dist, u, v, Engine::Ollivier).unwrap().value,
                        )
                    });
                    found.insert(key, EndForm { ollivier_nonneg: ollivier, ..form });
                }
            }
        }
        println!("cap size {m}: {} new", found.len() - before);
    }
    let bare_n = attach_caps(CORE, &bare, &bare, false).unwrap().with_scheme(WeightScheme::Normalized);
    let dn = bare_n.distances();
    let ladder_ollivier = bare_n
        .edges()
        .into_iter()
        .map(|(u, v)| edge_curvature(&bare_n, &dn, u, v, Engine::Ollivier).unwrap().value)
        .min();
    println!("bare ladder min kappa^O: {:?}", ladder_ollivier);
    for f in found.values() {
        println!("vertices {} edges {:?} attach {:?} ollivier {}", f.vertices, f.edges, f.attach, f.ollivier_nonneg);
    }
}
