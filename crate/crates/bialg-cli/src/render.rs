//! Text and JSON renderings of truncated behavior trees, plus the output
//! collector for `ccs run`.
//!
//! JSON schema: every node is an object with a `kind` field; `cut` marks the
//! depth boundary. Senders carry `chan`/`value` and `children` (one
//! successor), receivers carry `chan` and a `table` of
//! `{"value": v, "node": ...}` entries, silent steps carry `children`.
//! Stream cells are `{"kind": "cell", "value": n, "children": [tail]}`;
//! razor nodes are `{"kind": "stop", "value": n}` or
//! `{"kind": "step", "children": [...]}`.

use serde_json::{json, Value as Json};

use bialg::equiv::{ActTab, TruncTree};
use bialg::lang::ccs::{Act, ActsF};
use bialg::lang::razor::{StopAndGo, StopAndGoF};
use bialg::lang::stream::StreamF;
use bialg::rec::Behavior;

const CUT_MARK: &str = "...";

pub fn stream_text(tree: &TruncTree<StreamF>) -> String {
    let mut out = String::new();
    let mut cur = tree;
    loop {
        match cur {
            TruncTree::Cut => {
                out.push_str(CUT_MARK);
                return out;
            }
            TruncTree::Node(cell) => {
                out.push_str(&cell.head.to_string());
                out.push_str(" :< ");
                cur = &cell.tail;
            }
        }
    }
}

pub fn stream_json(tree: &TruncTree<StreamF>) -> Json {
    match tree {
        TruncTree::Cut => json!({ "kind": "cut" }),
        TruncTree::Node(cell) => json!({
            "kind": "cell",
            "value": cell.head,
            "children": [stream_json(&cell.tail)],
        }),
    }
}

pub fn stop_and_go_text(tree: &TruncTree<StopAndGoF>) -> String {
    let mut out = String::new();
    stop_and_go_lines(tree, 0, &mut out);
    out
}

fn indent(out: &mut String, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn stop_and_go_lines(tree: &TruncTree<StopAndGoF>, depth: usize, out: &mut String) {
    indent(out, depth);
    match tree {
        TruncTree::Cut => out.push_str(CUT_MARK),
        TruncTree::Node(layer) => match &**layer {
            StopAndGo::Stopped(n) => out.push_str(&format!("stop {n}")),
            StopAndGo::Step(children) => {
                out.push_str("step");
                for child in children {
                    out.push('\n');
                    stop_and_go_lines(child, depth + 1, out);
                }
            }
        },
    }
    if depth == 0 {
        out.push('\n');
    }
}

pub fn stop_and_go_json(tree: &TruncTree<StopAndGoF>) -> Json {
    match tree {
        TruncTree::Cut => json!({ "kind": "cut" }),
        TruncTree::Node(layer) => match &**layer {
            StopAndGo::Stopped(n) => json!({ "kind": "stop", "value": n }),
            StopAndGo::Step(children) => json!({
                "kind": "step",
                "children": children.iter().map(stop_and_go_json).collect::<Vec<_>>(),
            }),
        },
    }
}

pub fn acts_text(tree: &TruncTree<ActsF>) -> String {
    let mut out = String::new();
    acts_lines(tree, 0, &mut out);
    out
}

fn acts_lines(tree: &TruncTree<ActsF>, depth: usize, out: &mut String) {
    match tree {
        TruncTree::Cut => {
            indent(out, depth);
            out.push_str(CUT_MARK);
            out.push('\n');
        }
        TruncTree::Node(actions) => {
            if actions.is_empty() {
                indent(out, depth);
                out.push_str("stuck\n");
            }
            for action in actions.iter() {
                match action {
                    ActTab::Send(c, v, next) => {
                        indent(out, depth);
                        out.push_str(&format!("{c}!({v})\n"));
                        acts_lines(next, depth + 1, out);
                    }
                    ActTab::Recv(c, table) => {
                        indent(out, depth);
                        out.push_str(&format!("{c}?\n"));
                        for (v, next) in table {
                            indent(out, depth + 1);
                            out.push_str(&format!("{v} ->\n"));
                            acts_lines(next, depth + 2, out);
                        }
                    }
                    ActTab::Silent(next) => {
                        indent(out, depth);
                        out.push_str("tau\n");
                        acts_lines(next, depth + 1, out);
                    }
                }
            }
        }
    }
}

pub fn acts_json(tree: &TruncTree<ActsF>) -> Json {
    match tree {
        TruncTree::Cut => json!({ "kind": "cut" }),
        TruncTree::Node(actions) => json!({
            "kind": "acts",
            "children": actions
                .iter()
                .map(|action| match action {
                    ActTab::Send(c, v, next) => json!({
                        "kind": "send",
                        "chan": c,
                        "value": v,
                        "children": [acts_json(next)],
                    }),
                    ActTab::Recv(c, table) => json!({
                        "kind": "recv",
                        "chan": c,
                        "table": table
                            .iter()
                            .map(|(v, next)| json!({ "value": v, "node": acts_json(next) }))
                            .collect::<Vec<_>>(),
                    }),
                    ActTab::Silent(next) => json!({
                        "kind": "silent",
                        "children": [acts_json(next)],
                    }),
                })
                .collect::<Vec<_>>(),
        }),
    }
}

/// Depth-first output collection for `ccs run`. With `nub`, traversal
/// continues past duplicates and stops once `max_outputs` distinct values
/// have been found (or the tree is exhausted).
pub fn collect_outputs(
    b: &Behavior<ActsF>,
    max_outputs: usize,
    max_depth: usize,
    nub: bool,
) -> Vec<u64> {
    if !nub {
        return bialg::lang::ccs::outputs(b, max_outputs, max_depth);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    collect_distinct(b, max_outputs, max_depth, &mut seen, &mut out);
    out
}

fn collect_distinct(
    b: &Behavior<ActsF>,
    max_outputs: usize,
    depth_left: usize,
    seen: &mut std::collections::HashSet<u64>,
    out: &mut Vec<u64>,
) {
    if out.len() >= max_outputs || depth_left == 0 {
        return;
    }
    for act in b.observe().0 {
        if out.len() >= max_outputs {
            return;
        }
        match act {
            Act::Send(_, v, next) => {
                if seen.insert(v) {
                    out.push(v);
                }
                collect_distinct(&next, max_outputs, depth_left - 1, seen, out);
            }
            Act::Recv(_, _) => {}
            Act::Silent(next) => collect_distinct(&next, max_outputs, depth_left - 1, seen, out),
        }
    }
}
