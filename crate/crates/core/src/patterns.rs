//! Declarative templates for the local structure around a window
//! `p = v_i, a = v_{i+1}, b = v_{i+2}, q = v_{i+3}` of a geodesic path.
//!
//! `u_a`, `u_b` are the extra neighbors of `a`, `b` (present exactly when the
//! state is a 3-state). A template lists edges that must be present among
//! the window roles and up to two free vertices `w`, `w'` with prescribed
//! levels `r = d(v_0, ·)`, given as offsets from `i`. The triangle `u_a = u_b`
//! is written as the edge `a ∼ u_b`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::state::State;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    P,
    A,
    B,
    Q,
    UA,
    UB,
    W,
    W2,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::P => "p",
            Role::A => "a",
            Role::B => "b",
            Role::Q => "q",
            Role::UA => "ua",
            Role::UB => "ub",
            Role::W => "w",
            Role::W2 => "w2",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        [Role::P, Role::A, Role::B, Role::Q, Role::UA, Role::UB, Role::W, Role::W2].into_iter().find(|r| r.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternTemplate {
    /// Subfigure letter within its case.
    pub label: char,
    /// Free vertices and their level offsets from `i`.
    pub free: Vec<(Role, i64)>,
    pub edges: Vec<(Role, Role)>,
    /// Never present on geodesic paths of length at least 6.
    pub excluded: bool,
}

/// All templates of one state pair. An empty template list with
/// `forbidden` set means the pair cannot occur.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternCase {
    pub pair: (State, State),
    pub forbidden: bool,
    pub templates: Vec<PatternTemplate>,
}

impl PatternCase {
    pub fn id(&self) -> String {
        case_id(self.pair)
    }
}

fn state_tag(s: State) -> &'static str {
    match s {
        State::Two => "2",
        State::ThreeMinus => "3minus",
        State::ThreeZero => "3zero",
        State::ThreePlus => "3plus",
    }
}

pub fn parse_state_tag(s: &str) -> Option<State> {
    [State::Two, State::ThreeMinus, State::ThreeZero, State::ThreePlus].into_iter().find(|&t| state_tag(t) == s)
}

/// `"case_2_3minus"` style identifier of a state pair.
pub fn case_id(pair: (State, State)) -> String {
    alloc::format!("case_{}_{}", state_tag(pair.0), state_tag(pair.1))
}

type Raw = (&'static [(Role, i64)], &'static [(Role, Role)], bool);

use Role::*;
use State::*;

const TRIANGLE: Raw = (&[], &[(A, UB)], false);
const P_UB: Raw = (&[], &[(P, UB)], false);
const UA_Q: Raw = (&[], &[(UA, Q)], false);
const UA_UB: Raw = (&[], &[(UA, UB)], false);

const fn detour_left(level: i64) -> [(Role, i64); 1] {
    [(W, level)]
}

const DETOUR: &[(Role, Role)] = &[(P, W), (W, UB), (UA, W2), (W2, Q)];

const CASES: &[((State, State), &[Raw])] = &[
    ((Two, Two), &[(&[], &[], false)]),
    (
        (Two, ThreeMinus),
        &[P_UB, (&detour_left(0), &[(P, W), (W, UB)], false), (&detour_left(1), &[(P, W), (W, UB)], true)],
    ),
    ((Two, ThreeZero), &[(&[(W, 1)], &[(P, W), (W, UB)], false)]),
    ((Two, ThreePlus), &[]),
    ((ThreeMinus, Two), &[]),
    ((ThreeZero, Two), &[(&[(W2, 2)], &[(UA, W2), (W2, Q)], false)]),
    ((ThreePlus, Two), &[UA_Q, (&[(W2, 3)], &[(UA, W2), (W2, Q)], false), (&[(W2, 2)], &[(UA, W2), (W2, Q)], true)]),
    ((ThreeMinus, ThreeMinus), &[P_UB, UA_UB]),
    ((ThreeMinus, ThreeZero), &[]),
    ((ThreeMinus, ThreePlus), &[]),
    (
        (ThreeZero, ThreeMinus),
        &[
            P_UB,
            TRIANGLE,
            (UA_UB.0, UA_UB.1, true),
            (&[(W, 0), (W2, 2)], DETOUR, true),
            (&[(W, 1), (W2, 2)], DETOUR, true),
        ],
    ),
    ((ThreeZero, ThreeZero), &[UA_UB, (&[(W, 1), (W2, 2)], DETOUR, false)]),
    ((ThreeZero, ThreePlus), &[]),
    (
        (ThreePlus, ThreeMinus),
        &[
            UA_Q,
            P_UB,
            (UA_UB.0, UA_UB.1, true),
            (&[(W, 0), (W2, 2)], DETOUR, true),
            (&[(W, 0), (W2, 3)], DETOUR, true),
            (&[(W, 1), (W2, 2)], DETOUR, true),
            (&[(W, 1), (W2, 3)], DETOUR, true),
        ],
    ),
    (
        (ThreePlus, ThreeZero),
        &[
            UA_Q,
            TRIANGLE,
            (UA_UB.0, UA_UB.1, true),
            (&[(W, 1), (W2, 2)], DETOUR, true),
            (&[(W, 1), (W2, 3)], DETOUR, true),
        ],
    ),
    ((ThreePlus, ThreePlus), &[UA_Q, UA_UB]),
];

/// The builtin case table, one entry for each of the 16 state pairs.
pub fn builtin_cases() -> Vec<PatternCase> {
    CASES
        .iter()
        .map(|&(pair, raws)| PatternCase {
            pair,
            forbidden: raws.is_empty(),
            templates: raws
                .iter()
                .enumerate()
                .map(|(k, &(free, edges, excluded))| PatternTemplate {
                    label: (b'a' + k as u8) as char,
                    free: free.to_vec(),
                    edges: edges.to_vec(),
                    excluded,
                })
                .collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        let cases = builtin_cases();
        assert_eq!(cases.len(), 16);
        let forbidden: Vec<_> = cases.iter().filter(|c| c.forbidden).map(|c| c.id()).collect();
        assert_eq!(
            forbidden,
            ["case_2_3plus", "case_3minus_2", "case_3minus_3zero", "case_3minus_3plus", "case_3zero_3plus"]
        );
        let counts: Vec<usize> = cases.iter().filter(|c| !c.forbidden).map(|c| c.templates.len()).collect();
        assert_eq!(counts, [1, 3, 1, 1, 3, 2, 5, 2, 7, 5, 2]);
    }

    #[test]
    fn excluded_templates_follow_allowed_ones() {
        for c in builtin_cases() {
            let flags: Vec<bool> = c.templates.iter().map(|t| t.excluded).collect();
            assert!(flags.windows(2).all(|w| w[0] <= w[1]), "{}", c.id());
        }
    }
}
