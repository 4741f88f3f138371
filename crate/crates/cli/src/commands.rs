use std::fs::{self, File};
use std::io::BufWriter;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use semnet::experiments::{self, allocation_start, meets_demands};
use semnet::spreading::{history_sources, run_spread_trace};
use semnet::{
    cycles_to_equilibrium, evaluate_pairs, generate_network, load_network, load_pairs, rank_nodes, run_cobweb,
    run_game, save_network, trace, utilization, ActivationState, CobwebParams, GameParams, NodeId, Scale,
    SemanticNetwork, SpreadParams,
};

use crate::{CobwebArgs, Common, CompareArgs, Experiment, ScaleArg, Sources};

const VALIDATION: u8 = 2;
const RUNTIME: u8 = 3;
const RANKED: usize = 10;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: VALIDATION,
            message: message.into(),
        }
    }
}

impl From<semnet::Error> for Failure {
    fn from(e: semnet::Error) -> Self {
        Failure {
            code: if e.is_validation() { VALIDATION } else { RUNTIME },
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn spread_params(c: &Common) -> Result<SpreadParams, Failure> {
    let p = SpreadParams {
        delta: c.delta,
        fire_threshold: c.fire_threshold.unwrap_or(SpreadParams::new(c.budget).fire_threshold),
        max_steps: c.max_steps,
        budget: c.budget,
    };
    p.validate()?;
    Ok(p)
}

fn game_params(c: &Common) -> Result<GameParams, Failure> {
    let defaults = GameParams::new(c.budget);
    let p = GameParams {
        epsilon: c.epsilon.unwrap_or(defaults.epsilon),
        max_rounds: c.max_rounds,
        screen_threshold: c.screen_threshold,
        delta: c.delta,
        budget: c.budget,
    };
    p.validate()?;
    Ok(p)
}

fn network(c: &Common) -> Result<SemanticNetwork, Failure> {
    let path = c
        .network
        .as_ref()
        .ok_or_else(|| Failure::invalid("--network is required"))?;
    load_network(path).map_err(input_error)
}

/// Anything wrong with an input file is the caller's to fix.
fn input_error(e: semnet::Error) -> Failure {
    Failure::invalid(e.to_string())
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn out_dir(c: &Common) -> Result<&Path, Failure> {
    fs::create_dir_all(&c.out).map_err(|e| Failure::invalid(format!("{}: {e}", c.out.display())))?;
    Ok(&c.out)
}

fn write_summary(c: &Common, summary: &Value) -> Outcome {
    let path = out_dir(c)?.join("summary.json");
    let mut text = serde_json::to_string_pretty(summary).expect("summary serializes");
    text.push('\n');
    fs::write(&path, text).map_err(|e| Failure {
        code: RUNTIME,
        message: format!("{}: {e}", path.display()),
    })
}

fn resolve_sources(net: &SemanticNetwork, s: &Sources, budget: f64) -> Result<Vec<(NodeId, f64)>, Failure> {
    if s.sources.is_empty() {
        let Some(now) = s.now else {
            return Err(Failure::invalid("give --source or --now"));
        };
        let found = history_sources(net, now, s.decay)?;
        if found.is_empty() {
            return Err(Failure::invalid("no node has a usable history at --now"));
        }
        return Ok(found);
    }
    let mut named = Vec::new();
    for raw in &s.sources {
        let (label, energy) = match raw.split_once('=') {
            Some((l, e)) => {
                let e: f64 = e
                    .trim()
                    .parse()
                    .map_err(|_| Failure::invalid(format!("--source {raw}: bad energy")))?;
                (l, Some(e))
            }
            None => (raw.as_str(), None),
        };
        named.push((net.id_of(net.index_by_label(label)?), energy));
    }
    let given: f64 = named.iter().filter_map(|s| s.1).sum();
    let open = named.iter().filter(|s| s.1.is_none()).count();
    let share = if open > 0 {
        (budget - given).max(0.0) / open as f64
    } else {
        0.0
    };
    Ok(named.into_iter().map(|(id, e)| (id, e.unwrap_or(share))).collect())
}

#[derive(Serialize)]
struct NodeValue<'a> {
    id: u32,
    label: &'a str,
    held: f64,
}

fn held_table<'a>(net: &'a SemanticNetwork, state: &ActivationState) -> Vec<NodeValue<'a>> {
    (0..net.len())
        .map(|i| NodeValue {
            id: net.id_of(i).0,
            label: &net.node(i).label,
            held: state.held[i],
        })
        .collect()
}

fn ranking<'a>(net: &'a SemanticNetwork, state: &ActivationState) -> Vec<NodeValue<'a>> {
    rank_nodes(net, state, RANKED)
        .into_iter()
        .map(|(id, held)| NodeValue {
            id: id.0,
            label: &net.node(net.index_of(id).expect("ranked ids exist")).label,
            held,
        })
        .collect()
}

fn labelled(net: &SemanticNetwork, sources: &[(NodeId, f64)]) -> Value {
    sources
        .iter()
        .map(|&(id, energy)| {
            let label = &net.node(net.index_of(id).expect("resolved")).label;
            json!({ "id": id.0, "label": label, "energy": energy })
        })
        .collect()
}

pub fn spread(c: &Common, s: &Sources) -> Outcome {
    let net = network(c)?;
    let sp = spread_params(c)?;
    let sources = resolve_sources(&net, s, sp.budget)?;
    let states = run_spread_trace(&net, &sources, &sp)?;
    let last = states.last().expect("at least the seeded state");
    let summary = json!({
        "command": "spread",
        "sources": labelled(&net, &sources),
        "steps": last.t,
        "total": last.total(),
        "held": held_table(&net, last),
        "activated": last.activated_ids(&net).iter().map(|id| id.0).collect::<Vec<_>>(),
        "ranking": ranking(&net, last),
    });
    if c.trace {
        trace::write_spread_trace(create(&out_dir(c)?.join("trace.csv"))?, &net, &states)?;
    }
    write_summary(c, &summary)
}

pub fn game(c: &Common, s: &Sources) -> Outcome {
    let net = network(c)?;
    let sp = spread_params(c)?;
    let gp = game_params(c)?;
    let sources = resolve_sources(&net, s, sp.budget)?;
    let spread = semnet::run_spread(&net, &sources, &sp)?;
    let start = spread.rescaled(gp.budget)?;
    let outcome = run_game(&net, &start, &gp)?;
    let strategies: Vec<Value> = outcome
        .strategies
        .iter()
        .map(|(id, s)| json!({ "id": id.0, "strategy": s, "utility": outcome.utilities[id] }))
        .collect();
    let summary = json!({
        "command": "game",
        "sources": labelled(&net, &sources),
        "spread_steps": spread.t,
        "converged": outcome.converged,
        "rounds": outcome.rounds,
        "round_costs": outcome.round_costs,
        "nash": semnet::verify_nash(&net, &outcome, &gp),
        "held": held_table(&net, &outcome.final_state),
        "strategies": strategies,
        "ranking": ranking(&net, &outcome.final_state),
    });
    if c.trace {
        trace::write_game_trace(create(&out_dir(c)?.join("trace.csv"))?, &net, &start, &outcome)?;
    }
    write_summary(c, &summary)
}

pub fn relatedness(c: &Common, a: &str, b: &str) -> Outcome {
    let net = network(c)?;
    let (sp, gp) = (spread_params(c)?, game_params(c)?);
    let ia = net.id_of(net.index_by_label(a)?);
    let ib = net.id_of(net.index_by_label(b)?);
    let score = semnet::relatedness(&net, ia, ib, &sp, &gp, !c.no_game)?;
    write_summary(
        c,
        &json!({ "command": "relatedness", "a": a, "b": b, "use_game": !c.no_game, "score": score }),
    )
}

pub fn evaluate(c: &Common, pairs: Option<&Path>, scale: ScaleArg) -> Outcome {
    let net = network(c)?;
    let (sp, gp) = (spread_params(c)?, game_params(c)?);
    let path = pairs.ok_or_else(|| Failure::invalid("--pairs is required"))?;
    let scale = match scale {
        ScaleArg::Unit => Scale::Unit,
        ScaleArg::FivePoint => Scale::FivePoint,
    };
    let judgments = load_pairs(path, scale).map_err(input_error)?;
    let report = evaluate_pairs(&net, &judgments, &sp, &gp, !c.no_game)?;
    trace::write_pairs(create(&out_dir(c)?.join("pairs.csv"))?, &report.pairs)?;
    write_summary(
        c,
        &json!({
            "command": "evaluate",
            "use_game": !c.no_game,
            "rho": report.rho,
            "n_pairs": report.n_pairs,
            "tie_warning": report.tie_warning,
        }),
    )
}

pub fn cobweb(c: &Common, args: &CobwebArgs) -> Outcome {
    if args.nodes == 0 {
        return Err(Failure::invalid("--nodes must be positive"));
    }
    let params = CobwebParams {
        max_iters: c.max_rounds,
        ..CobwebParams::centered(args.r, args.demand_slope, args.supply_slope, args.demand)
    };
    let start = allocation_start(c.seed, args.nodes as usize, c.budget);
    let nodes: Vec<(f64, f64)> = start.iter().map(|&o| (o, args.demand)).collect();
    let result = run_cobweb(&nodes, &params, c.budget)?;
    let demands = vec![args.demand; nodes.len()];
    let cycles = cycles_to_equilibrium(&result);
    let summary = json!({
        "command": "cobweb",
        "seed": c.seed,
        "start": start,
        "stability": params.stability(),
        "allocations": result.allocations,
        "cycles": cycles.count,
        "converged": cycles.converged,
        "utilization": utilization(&result.allocations, &demands, c.budget)?,
        "meets_demand": meets_demands(&result.allocations, &demands),
    });
    if c.trace {
        trace::write_cobweb_trace(create(&out_dir(c)?.join("trace.csv"))?, &result.trace)?;
    }
    write_summary(c, &summary)
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}

pub fn compare(c: &Common, args: &CompareArgs) -> Outcome {
    if args.seeds == 0 {
        return Err(Failure::invalid("--seeds must be positive"));
    }
    let csv_path = out_dir(c)?.join("compare.csv");
    let summary = match args.experiment {
        Experiment::LoadBalance => {
            let (sp, gp) = (spread_params(c)?, game_params(c)?);
            let nodes = args.nodes.unwrap_or(50);
            let mut rows = Vec::new();
            for seed in c.seed..c.seed + args.seeds {
                rows.push(experiments::load_balance_run(seed, nodes, args.edge_prob, &sp, &gp)?);
            }
            trace::write_rows(create(&csv_path)?, &rows)?;
            json!({
                "command": "compare",
                "experiment": "load-balance",
                "seeds": args.seeds,
                "nodes": nodes,
                "edge_prob": args.edge_prob,
                "mean_snm_stddev": mean(rows.iter().map(|r| r.snm_stddev)),
                "mean_traditional_stddev": mean(rows.iter().map(|r| r.traditional_stddev)),
                "snm_lower": rows.iter().filter(|r| r.snm_stddev < r.traditional_stddev).count(),
                "all_converged": rows.iter().all(|r| r.converged),
            })
        }
        Experiment::Utilization | Experiment::Convergence => {
            let nodes = args.nodes.unwrap_or(6);
            let nodes = u32::try_from(nodes).map_err(|_| Failure::invalid("--nodes too large"))?;
            let grid = experiments::cobweb_grid(args.demand);
            let mut rows = Vec::new();
            for seed in c.seed..c.seed + args.seeds {
                rows.extend(experiments::allocation_runs(
                    seed,
                    nodes,
                    args.demand,
                    c.budget,
                    c.delta,
                    &grid,
                )?);
            }
            trace::write_rows(create(&csv_path)?, &rows)?;
            let name = if args.experiment == Experiment::Utilization {
                "utilization"
            } else {
                "convergence"
            };
            json!({
                "command": "compare",
                "experiment": name,
                "seeds": args.seeds,
                "nodes": nodes,
                "demand": args.demand,
                "budget": c.budget,
                "mean_snm_utilization": mean(rows.iter().map(|r| r.snm_utilization)),
                "mean_cobweb_utilization": mean(rows.iter().map(|r| r.cobweb_utilization)),
                "mean_snm_cycles": mean(rows.iter().map(|r| r.snm_cycles as f64)),
                "mean_cobweb_cycles": mean(rows.iter().map(|r| r.cobweb_cycles as f64)),
                "snm_converged": rows.iter().filter(|r| r.snm_converged).count(),
                "cobweb_converged": rows.iter().filter(|r| r.cobweb_converged).count(),
                "rows": rows.len(),
            })
        }
    };
    write_summary(c, &summary)
}

pub fn generate(c: &Common, nodes: usize, edge_prob: f64) -> Outcome {
    let net = generate_network(nodes, edge_prob, c.seed)?;
    let path = out_dir(c)?.join("network.json");
    save_network(&net, &path)?;
    write_summary(
        c,
        &json!({
            "command": "generate",
            "nodes": nodes,
            "edge_prob": edge_prob,
            "seed": c.seed,
            "edges": net.edges().len(),
            "network": "network.json",
        }),
    )
}
