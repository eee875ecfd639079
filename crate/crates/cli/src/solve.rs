use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use serde::Serialize;
use srd_core::exact::{solve_bb_with, BbOptions};
use srd_core::{is_valid_srdf, solve_brute, solve_nd, weight, Algo, Graph, Label, Labeling, SolveError, SolveResult, Verdict};

/// Runs `algo` under a wall-clock budget.
///
/// Branch-and-bound honours the budget itself and returns its incumbent.
/// The other solvers run on a worker thread; if it has not answered in time
/// the all-1 labeling is returned uncertified and the worker is abandoned.
pub fn run_solver(g: &Graph, algo: Algo, timeout: Duration) -> Result<SolveResult, SolveError> {
    if algo == Algo::Bb {
        let opts = BbOptions {
            incumbent: None,
            timeout: Some(timeout),
        };
        return solve_bb_with(g, &opts);
    }
    let (tx, rx) = mpsc::channel();
    let owned = g.clone();
    thread::spawn(move || {
        let result = match algo {
            Algo::Brute => solve_brute(&owned),
            _ => solve_nd(&owned),
        };
        let _ = tx.send(result);
    });
    match rx.recv_timeout(timeout) {
        Ok(result) => result,
        Err(_) => Ok(SolveResult {
            optimum: g.n() as i64,
            witness: Labeling::uniform(g.n(), Label::One),
            explored: 0,
            algo,
            certified: false,
        }),
    }
}

#[derive(Debug, Serialize)]
pub struct DecisionPayload {
    pub k: i64,
    /// `null` when an uncertified run leaves the question open.
    pub answer: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct SolvePayload {
    pub algo: Algo,
    pub optimum: i64,
    pub weight: i64,
    pub witness: Labeling,
    pub verdict: Verdict,
    pub explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<DecisionPayload>,
}

impl SolvePayload {
    pub fn new(g: &Graph, r: &SolveResult, k: Option<i64>) -> Self {
        let decision = k.map(|k| DecisionPayload {
            k,
            answer: if r.optimum <= k {
                Some(true)
            } else if r.certified {
                Some(false)
            } else {
                None
            },
        });
        SolvePayload {
            algo: r.algo,
            optimum: r.optimum,
            weight: weight(&r.witness),
            witness: r.witness.clone(),
            verdict: is_valid_srdf(g, &r.witness),
            explored: r.explored,
            decision,
        }
    }
}
