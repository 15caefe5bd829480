//! `key=value` pipeline reports and the structural statistics of each
//! construction.

use std::fmt;
use std::time::Duration;

use crate::graph::{RoleTable, VertexRole};
use crate::sat2wpe::WpeConstruction;
use crate::wpe::WpeInstance;
use crate::wpe2bw::{recount_alpha, CaterpillarConstruction};
use crate::wpe2dbw::DagConstruction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Refused,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Refused => "REFUSED",
        })
    }
}

/// Ordered report; byte-stable for fixed inputs when timings are left out.
#[derive(Debug, Clone, Default)]
pub struct Report {
    command: String,
    entries: Vec<(String, String)>,
    checks: Vec<(String, Verdict)>,
    timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Default::default() }
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.checks.push((name.into(), verdict));
    }

    pub fn check_bool(&mut self, name: impl Into<String>, ok: bool) {
        self.check(name, if ok { Verdict::Pass } else { Verdict::Fail });
    }

    pub fn timing(&mut self, name: impl Into<String>, d: Duration) {
        self.timings.push((name.into(), d));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Worst check verdict; a report without checks passes.
    pub fn verdict(&self) -> Verdict {
        self.checks.iter().map(|c| c.1).max().unwrap_or(Verdict::Pass)
    }

    pub fn render(&self, deterministic: bool) -> String {
        let mut out = format!("command={}\n", self.command);
        for (k, v) in &self.entries {
            out.push_str(&format!("{k}={v}\n"));
        }
        for (k, v) in &self.checks {
            out.push_str(&format!("check.{k}={v}\n"));
        }
        if !deterministic {
            for (k, d) in &self.timings {
                out.push_str(&format!("time.{k}_ms={:.3}\n", d.as_secs_f64() * 1e3));
            }
        }
        out.push_str(&format!("verdict={}\n", self.verdict()));
        out
    }
}

pub fn instance_stats(inst: &WpeInstance, r: &mut Report) {
    r.set("wpe.n", inst.n());
    r.set("wpe.m", inst.m());
    r.set("wpe.c", inst.c());
    let total: u128 = inst.runs().iter().map(|&(w, n)| w as u128 * n as u128).sum();
    r.set("wpe.weight_sum", total);
    r.check_bool("weight_sum_is_cm", total == inst.c() as u128 * inst.m() as u128);
}

pub fn wpe_construction_stats(con: &WpeConstruction, r: &mut Report) {
    let cs = &con.constants;
    r.set("sat.k", con.k);
    r.set("sat.t_prime", cs.t_prime);
    r.set("sat.variant", con.variant);
    r.set("const.cp", cs.cp);
    r.set("const.cu", cs.cu);
    for (i, v) in cs.cd.iter().enumerate() {
        r.set(format!("const.cd{}", i + 1), v);
    }
    r.set("const.cv", cs.cv);
    for (i, v) in cs.ca.iter().enumerate() {
        r.set(format!("const.ca{}", i + 1), v);
    }
    r.set("const.cl", cs.cl);
    r.set("const.cr", cs.cr);
    r.set("const.c", cs.c);
    r.check_bool("constants_chain", cs.is_strict_chain());
    for (name, count) in con.role_counts() {
        r.set(format!("count.{name}"), count);
    }
    instance_stats(&con.instance, r);
}

fn role_histogram(roles: &RoleTable, r: &mut Report) {
    let mut counts: Vec<(&'static str, u64)> = Vec::new();
    for (_, role) in roles.iter() {
        let key = match role {
            VertexRole::Floor(_) => "floor",
            VertexRole::FloorHair(_) => "floor_hair",
            VertexRole::Turn(_) => "turn",
            VertexRole::TurnHair { .. } => "turn_hair",
            VertexRole::Gadget(_) => "gadget",
            VertexRole::GadgetHair(_) => "gadget_hair",
            VertexRole::Subdivision(_) => "subdivision",
            VertexRole::Fan => "fan",
            VertexRole::Filler(_) => "filler",
        };
        match counts.iter_mut().find(|c| c.0 == key) {
            Some(c) => c.1 += 1,
            None => counts.push((key, 1)),
        }
    }
    for (k, n) in counts {
        r.set(format!("count.{k}"), n);
    }
}

pub fn caterpillar_stats(con: &CaterpillarConstruction, r: &mut Report) {
    let cs = &con.constants;
    r.set("bw.b", cs.b);
    r.set("bw.k", cs.k);
    r.set("bw.k_even", cs.k % 2 == 0);
    r.set("bw.m", cs.m);
    r.set("bw.n", cs.n);
    r.set("bw.c", cs.c);
    r.set("bw.alpha_formula", cs.alpha);
    let recount = recount_alpha(&con.roles);
    r.set("bw.alpha_recount", recount);
    r.set("bw.filler_len", cs.filler_len);
    r.set("bw.non_turning", cs.non_turning());
    r.set("graph.vertices", con.graph.n());
    r.set("graph.edges", con.graph.edges().len());
    role_histogram(&con.roles, r);
    r.check_bool("alpha_formula_eq_recount", recount == cs.alpha);
    r.check_bool("k_even", cs.k % 2 == 0);
    instance_stats(&con.instance, r);
}

pub fn dag_stats(con: &DagConstruction, r: &mut Report) {
    let cs = &con.constants;
    r.set("dbw.b", cs.b);
    r.set("dbw.k", cs.k);
    r.set("dbw.m", cs.m);
    r.set("dbw.n", cs.n);
    r.set("dbw.c", cs.c);
    r.set("dbw.alpha_formula", cs.alpha);
    let recount = recount_alpha(&con.roles);
    r.set("dbw.alpha_recount", recount);
    r.set("dbw.filler_len", cs.filler_len);
    r.set("graph.vertices", con.digraph.n());
    r.set("graph.arcs", con.digraph.arcs().len());
    role_histogram(&con.roles, r);
    r.check_bool("alpha_formula_eq_recount", recount == cs.alpha);
    r.check_bool("acyclic", con.digraph.is_acyclic());
    instance_stats(&con.instance, r);
}
