use std::fmt::Write;

use kostant_core::eisenstein::{KostantRecord, Report};
use kostant_core::hasse::{length_histogram, HasseDiagram};
use kostant_core::so_n2::{GroupSpec, ParabolicId};
use kostant_core::{Form, Rational, SymbolicWeight};
use serde::Serialize;

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn render(&self, csv: bool) -> String {
        if csv {
            self.csv()
        } else {
            self.text()
        }
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn text(&self) -> String {
        let width = |c: &str| c.chars().count();
        let mut widths: Vec<usize> = self.header.iter().map(|h| width(h)).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(cell));
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(cell);
                s.extend(std::iter::repeat_n(' ', w - width(cell)));
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&self.header);
        for row in &self.rows {
            line(row);
        }
        out
    }
}

pub fn cosets_table(h: &HasseDiagram) -> Table {
    let hist = length_histogram(h);
    let mut t = Table::new(["length", "word", "N(l)"]);
    for node in sorted_nodes(h) {
        t.push(vec![
            node.length.to_string(),
            node.word.to_string(),
            hist[&node.length].to_string(),
        ]);
    }
    t
}

fn sorted_nodes(h: &HasseDiagram) -> Vec<&kostant_core::hasse::HasseNode> {
    let mut nodes: Vec<_> = h.nodes().iter().collect();
    nodes.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    nodes
}

#[derive(Serialize)]
struct CosetRecord {
    id: usize,
    length: usize,
    word: Vec<usize>,
    word_text: String,
    weight: Vec<i64>,
    count_at_length: usize,
}

#[derive(Serialize)]
pub struct CosetsDoc {
    n: i64,
    parabolic: ParabolicId,
    crossed: Vec<usize>,
    count: usize,
    records: Vec<CosetRecord>,
}

pub fn cosets_json(g: &GroupSpec, p: ParabolicId, h: &HasseDiagram) -> CosetsDoc {
    let hist = length_histogram(h);
    CosetsDoc {
        n: g.n(),
        parabolic: p,
        crossed: g.crossed_set(p).into_iter().collect(),
        count: h.len(),
        records: sorted_nodes(h)
            .into_iter()
            .map(|node| CosetRecord {
                id: node.id,
                length: node.length,
                word: node.word.letters().to_vec(),
                word_text: node.word.to_string(),
                weight: node.weight.coords().to_vec(),
                count_at_length: hist[&node.length],
            })
            .collect(),
    }
}

pub fn edges_table(h: &HasseDiagram) -> Table {
    let mut t = Table::new(["from", "to", "label", "kind"]);
    for e in h.algo_edges() {
        t.push(vec![
            h.node(e.from).weight.to_string(),
            h.node(e.to).weight.to_string(),
            format!("s{}", e.label),
            "algorithm".into(),
        ]);
    }
    for e in h.cover_only_edges() {
        t.push(vec![
            h.node(e.from).weight.to_string(),
            h.node(e.to).weight.to_string(),
            root_label(&e.root),
            "cover".into(),
        ]);
    }
    t
}

fn root_label(simple: &[i64]) -> String {
    let mut s = String::new();
    for (j, &c) in simple.iter().enumerate().filter(|(_, &c)| c != 0) {
        if !s.is_empty() {
            s.push('+');
        }
        if c != 1 {
            let _ = write!(s, "{c}");
        }
        let _ = write!(s, "α{}", j + 1);
    }
    s
}

pub fn kostant_table(g: &GroupSpec, p: ParabolicId, records: &[KostantRecord<Rational>]) -> Table {
    let mut header = vec!["length".to_string(), "word".to_string()];
    header.extend(g.b_indices(p).iter().map(|j| format!("μ{j}")));
    let mut t = Table::new(header);
    for r in records {
        let mut row = vec![r.length.to_string(), r.word.to_string()];
        row.extend(r.mu_restricted.iter().map(Form::to_string));
        t.push(row);
    }
    t
}

pub fn lambdaw_table(p: ParabolicId, records: &[KostantRecord<Rational>]) -> Table {
    let i = p.node();
    let mut t = Table::new([
        "length".to_string(),
        "word".to_string(),
        format!("a{i}"),
        format!("a{i}·ρ{i}"),
        "holomorphic".to_string(),
    ]);
    for r in records {
        t.push(vec![
            r.length.to_string(),
            r.word.to_string(),
            r.a_coefficient.to_string(),
            r.raw_a_coefficient.to_string(),
            if r.holomorphy_guaranteed { "yes" } else { "no" }.to_string(),
        ]);
    }
    t
}

#[derive(Serialize)]
pub struct RecordsDoc<'a> {
    n: i64,
    parabolic: ParabolicId,
    b_indices: Vec<usize>,
    rho_i: String,
    lambda: &'a [Form],
    records: &'a [KostantRecord<Rational>],
}

pub fn records_json<'a>(
    g: &GroupSpec,
    p: ParabolicId,
    lambda: &'a SymbolicWeight,
    records: &'a [KostantRecord<Rational>],
) -> RecordsDoc<'a> {
    RecordsDoc {
        n: g.n(),
        parabolic: p,
        b_indices: g.b_indices(p),
        rho_i: g.rho_i::<Rational>(p).to_string(),
        lambda: lambda.coords(),
        records,
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn report_text(r: &Report<Rational>) -> String {
    let mut out = String::new();
    let parity = format!("{:?}", r.parity).to_lowercase();
    let _ = writeln!(out, "SO({},2)  k={}  type {}  {parity}", r.n, r.k, r.root_type);
    let _ = writeln!(out, "λ = ({})", join(&r.lambda, ", "));
    let _ = writeln!(
        out,
        "bounds: l0={} q0={} vcd={}  nonvanishing range [{}, {}]",
        r.bounds.l0, r.bounds.q0, r.bounds.vcd, r.nonvanishing_range[0], r.nonvanishing_range[1]
    );
    for pr in &r.parabolics {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{}: crossed {{{}}}  dim n = {}  ρ{} = {}  |W^P| = {}",
            pr.parabolic,
            join(&pr.crossed, ","),
            pr.dim_nilradical,
            pr.parabolic.node(),
            pr.rho_i,
            pr.coset_count
        );
        let _ = writeln!(
            out,
            "  N(l): {}",
            join(pr.counts.iter().map(|c| format!("{}:{}", c.length, c.count)), " ")
        );
        let _ = writeln!(out, "  Levi subgroups:");
        for l in &pr.levi {
            let _ = writeln!(out, "    {}: {}", l.index, l.name);
        }
        let _ = writeln!(
            out,
            "  cuspidal degrees of {}: {{{}}}",
            pr.pi_label,
            join(&pr.cuspidal_degrees, ",")
        );
        let s = &pr.support;
        let _ = writeln!(out, "  degree support: [{}, {}]", s.q_min, s.q_max);
        let _ = writeln!(
            out,
            "  generated by (d,l): {}",
            join(s.generation.iter().map(|t| format!("({},{})→{}", t.d, t.l, t.q)), " ")
        );
        if s.even_case_constraint_needed {
            let _ = writeln!(out, "  requires λ{} = λ{}", r.k - 1, r.k);
        }
    }
    out
}
