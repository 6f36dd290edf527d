//! Finite-group state sums on closed triangulated surfaces.
//!
//! Surfaces are Δ-complex style: a list of directed edges and a list of
//! triangles, each triangle being three directed edge slots that chain
//! head-to-tail into a closed cycle. Parallel edges and self-loops are
//! allowed, so minimal presentations (the one-vertex torus, the
//! three-vertex "pillowcase" sphere) are expressible.
//!
//! A coloring assigns a group element to every edge; it is admissible when
//! every triangle's boundary word multiplies to the identity, an edge
//! traversed against its stored direction contributing its inverse. The
//! partition function is
//!
//! ```text
//! Z = (number of admissible colorings) / |G|^{#vertices}
//! ```
//!
//! as an exact fraction. The production enumerator backtracks over edges
//! with early triangle-constraint propagation (a triangle with two colored
//! edges forces the third); [`naive_partition_function`] is the independent
//! brute-force oracle it is checked against. Z is invariant under the two
//! Pachner moves, [`pachner_13`] and [`pachner_22`].

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::rational::Rational;
use crate::rng::SplitMix64;

/// A finite group presented by its Cayley table over element indices
/// `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order × order` multiplication table.
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

/// A failed group axiom, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotAGroup {
    pub axiom: &'static str,
    pub detail: String,
}

impl fmt::Display for NotAGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not-a-group ({}): {}", self.axiom, self.detail)
    }
}

impl FiniteGroup {
    /// The cyclic group Z/n.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0, "cyclic group order must be positive");
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push((a + b) % n);
            }
        }
        FiniteGroup {
            order: n,
            mul,
            identity: 0,
            inv: (0..n).map(|a| (n - a) % n).collect(),
        }
    }

    /// The symmetric group S₃ on three letters. Elements are the six
    /// permutations of `[0,1,2]` in lexicographic order; composition is
    /// "apply right, then left".
    pub fn symmetric_3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut mul = Vec::with_capacity(36);
        for a in perms {
            for b in perms {
                let composed = [a[b[0]], a[b[1]], a[b[2]]];
                mul.push(index_of(composed));
            }
        }
        let table: Vec<Vec<usize>> = (0..6).map(|a| mul[a * 6..(a + 1) * 6].to_vec()).collect();
        FiniteGroup::from_table(&table).expect("S3 table is a group")
    }

    /// Validates an explicit Cayley table: closure, associativity (checked
    /// exhaustively), a two-sided identity, and two-sided inverses.
    pub fn from_table(table: &[Vec<usize>]) -> Result<FiniteGroup, NotAGroup> {
        let n = table.len();
        if n == 0 {
            return Err(NotAGroup { axiom: "non-empty", detail: "empty table".into() });
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(NotAGroup {
                    axiom: "closure",
                    detail: alloc::format!("row {a} has length {} instead of {n}", row.len()),
                });
            }
            for (b, &ab) in row.iter().enumerate() {
                if ab >= n {
                    return Err(NotAGroup {
                        axiom: "closure",
                        detail: alloc::format!("{a}·{b} = {ab} is outside 0..{n}"),
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(NotAGroup {
                            axiom: "associativity",
                            detail: alloc::format!(
                                "({a}·{b})·{c} = {} but {a}·({b}·{c}) = {}",
                                table[table[a][b]][c],
                                table[a][table[b][c]]
                            ),
                        });
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(NotAGroup { axiom: "identity", detail: "no two-sided identity".into() })?;
        let mut inv = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            let b = (0..n)
                .find(|&b| row[b] == identity && table[b][a] == identity)
                .ok_or_else(|| NotAGroup {
                    axiom: "inverse",
                    detail: alloc::format!("element {a} has no two-sided inverse"),
                })?;
            inv.push(b);
        }
        let mul = table.iter().flat_map(|row| row.iter().copied()).collect();
        Ok(FiniteGroup { order: n, mul, identity, inv })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// One directed slot of a triangle: an edge index and whether the triangle
/// traverses the edge tail→head (`true`) or head→tail (`false`).
pub type Slot = (usize, bool);

/// A closed combinatorial surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface2D {
    pub vertex_count: usize,
    /// `(tail, head)` per edge.
    pub edges: Vec<(usize, usize)>,
    /// Three directed slots per triangle, chaining head-to-tail.
    pub triangles: Vec<[Slot; 3]>,
}

/// Why a [`Surface2D`] is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceViolation {
    BadVertex { edge: usize, vertex: usize },
    BadEdgeIndex { triangle: usize, slot: usize, edge: usize },
    OpenCycle { triangle: usize, slot: usize },
    /// The closed-surface condition: each edge in exactly two slots.
    EdgeUseCount { edge: usize, uses: usize },
}

impl fmt::Display for SurfaceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceViolation::BadVertex { edge, vertex } => {
                write!(f, "edge {edge} references vertex {vertex} outside the vertex range")
            }
            SurfaceViolation::BadEdgeIndex { triangle, slot, edge } => {
                write!(f, "triangle {triangle} slot {slot} references missing edge {edge}")
            }
            SurfaceViolation::OpenCycle { triangle, slot } => {
                write!(f, "triangle {triangle} does not chain head-to-tail at slot {slot}")
            }
            SurfaceViolation::EdgeUseCount { edge, uses } => {
                write!(f, "edge {edge} is used by {uses} triangle slots, expected exactly 2")
            }
        }
    }
}

impl Surface2D {
    /// Start and end vertex of a slot, after applying its direction flag.
    fn slot_ends(&self, slot: Slot) -> (usize, usize) {
        let (tail, head) = self.edges[slot.0];
        if slot.1 {
            (tail, head)
        } else {
            (head, tail)
        }
    }

    pub fn validate(&self) -> Result<(), SurfaceViolation> {
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            for v in [t, h] {
                if v >= self.vertex_count {
                    return Err(SurfaceViolation::BadVertex { edge: i, vertex: v });
                }
            }
        }
        let mut uses = alloc::vec![0usize; self.edges.len()];
        for (ti, tri) in self.triangles.iter().enumerate() {
            for (si, &(e, _)) in tri.iter().enumerate() {
                if e >= self.edges.len() {
                    return Err(SurfaceViolation::BadEdgeIndex { triangle: ti, slot: si, edge: e });
                }
                uses[e] += 1;
            }
            for si in 0..3 {
                let (_, head) = self.slot_ends(tri[si]);
                let (next_start, _) = self.slot_ends(tri[(si + 1) % 3]);
                if head != next_start {
                    return Err(SurfaceViolation::OpenCycle { triangle: ti, slot: si });
                }
            }
        }
        for (e, &u) in uses.iter().enumerate() {
            if u != 2 {
                return Err(SurfaceViolation::EdgeUseCount { edge: e, uses: u });
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Disjoint union: vertex and edge indices of `other` are shifted.
    pub fn disjoint_union(&self, other: &Surface2D) -> Surface2D {
        let vo = self.vertex_count;
        let eo = self.edges.len();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(t, h)| (t + vo, h + vo)));
        let mut triangles = self.triangles.clone();
        triangles.extend(
            other
                .triangles
                .iter()
                .map(|tri| tri.map(|(e, d)| (e + eo, d))),
        );
        Surface2D { vertex_count: vo + other.vertex_count, edges, triangles }
    }
}

/// An assignment of a group element index to every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(pub Vec<usize>);

/// The boundary word of one triangle under a coloring, starting at the
/// given slot.
fn triangle_product(
    s: &Surface2D,
    g: &FiniteGroup,
    colors: &[usize],
    triangle: usize,
    start: usize,
) -> usize {
    let mut acc = g.identity();
    for k in 0..3 {
        let (e, fwd) = s.triangles[triangle][(start + k) % 3];
        let x = if fwd { colors[e] } else { g.inv(colors[e]) };
        acc = g.mul(acc, x);
    }
    acc
}

/// Is every triangle's boundary word the identity?
pub fn is_admissible(s: &Surface2D, g: &FiniteGroup, c: &Coloring) -> bool {
    assert_eq!(c.0.len(), s.edges.len(), "coloring must assign every edge");
    (0..s.triangles.len()).all(|t| triangle_product(s, g, &c.0, t, 0) == g.identity())
}

/// Brute-force oracle: enumerates all `|G|^{#edges}` colorings. Cost grows
/// exponentially; callers guard the size.
pub fn naive_partition_function(s: &Surface2D, g: &FiniteGroup) -> Rational {
    let mut colors = alloc::vec![0usize; s.edges.len()];
    let mut count: u128 = 0;
    loop {
        if (0..s.triangles.len()).all(|t| triangle_product(s, g, &colors, t, 0) == g.identity()) {
            count += 1;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == colors.len() {
                return z_from_count(count, g.order(), s.vertex_count);
            }
            colors[i] += 1;
            if colors[i] < g.order() {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

fn z_from_count(count: u128, order: usize, vertices: usize) -> Rational {
    let denom = BigInt::from(order).pow(vertices as u32);
    Rational::new(BigInt::from(count), denom)
}

struct Search<'a> {
    s: &'a Surface2D,
    g: &'a FiniteGroup,
    /// Triangle indices incident to each edge, one entry per slot.
    edge_triangles: Vec<Vec<usize>>,
    /// Static branching order (most-constrained-first cascade).
    branch_order: Vec<usize>,
    colors: Vec<Option<usize>>,
    tri_colored: Vec<u8>,
    trail: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(s: &'a Surface2D, g: &'a FiniteGroup) -> Self {
        let mut edge_triangles: Vec<Vec<usize>> = alloc::vec![Vec::new(); s.edges.len()];
        for (ti, tri) in s.triangles.iter().enumerate() {
            for &(e, _) in tri {
                edge_triangles[e].push(ti);
            }
        }
        let branch_order = Self::plan_branch_order(s, &edge_triangles);
        Search {
            s,
            g,
            edge_triangles,
            branch_order,
            colors: alloc::vec![None; s.edges.len()],
            tri_colored: alloc::vec![0; s.triangles.len()],
            trail: Vec::with_capacity(s.edges.len()),
        }
    }

    /// Simulates the propagation cascade once to fix the branching order:
    /// forced edges never branch, and among the rest the next branch edge
    /// is the one touching the most already-constrained triangles.
    fn plan_branch_order(s: &Surface2D, edge_triangles: &[Vec<usize>]) -> Vec<usize> {
        let mut colored = alloc::vec![false; s.edges.len()];
        let mut tri_sim = alloc::vec![0u8; s.triangles.len()];
        let mut order = Vec::new();
        let mut remaining = s.edges.len();
        while remaining > 0 {
            // Forced edges first.
            let forced = s.triangles.iter().enumerate().find_map(|(ti, tri)| {
                if tri_sim[ti] == 2 {
                    tri.iter().map(|&(e, _)| e).find(|&e| !colored[e])
                } else {
                    None
                }
            });
            let edge = match forced {
                Some(e) => e,
                None => {
                    let e = (0..s.edges.len())
                        .filter(|&e| !colored[e])
                        .max_by_key(|&e| {
                            edge_triangles[e].iter().filter(|&&t| tri_sim[t] > 0).count()
                        })
                        .expect("some edge is uncolored");
                    order.push(e);
                    e
                }
            };
            colored[edge] = true;
            remaining -= 1;
            for &t in &edge_triangles[edge] {
                tri_sim[t] += 1;
            }
        }
        order
    }

    /// Assigns `edge = value` and propagates triangle constraints. Returns
    /// false on contradiction. All assignments (forced ones included) land
    /// on the trail.
    fn assign(&mut self, edge: usize, value: usize) -> bool {
        let mut queue: Vec<(usize, usize)> = alloc::vec![(edge, value)];
        while let Some((e, v)) = queue.pop() {
            match self.colors[e] {
                Some(w) => {
                    if w != v {
                        return false;
                    }
                    continue;
                }
                None => {
                    self.colors[e] = Some(v);
                    self.trail.push(e);
                }
            }
            // Increment every counter before any check can bail out, so the
            // trail always undoes complete edges.
            for idx in 0..self.edge_triangles[e].len() {
                let t = self.edge_triangles[e][idx];
                self.tri_colored[t] += 1;
            }
            for idx in 0..self.edge_triangles[e].len() {
                let t = self.edge_triangles[e][idx];
                match self.tri_colored[t] {
                    3 => {
                        if !self.triangle_closes(t) {
                            return false;
                        }
                    }
                    2 => {
                        // `None` only for a triangle whose two colored slots
                        // share a doubled edge; it gets checked at count 3.
                        if let Some((forced_edge, forced_value)) = self.solve_third(t) {
                            queue.push((forced_edge, forced_value));
                        }
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn triangle_closes(&self, t: usize) -> bool {
        let mut acc = self.g.identity();
        for &(e, fwd) in &self.s.triangles[t] {
            let c = self.colors[e].expect("triangle fully colored");
            let x = if fwd { c } else { self.g.inv(c) };
            acc = self.g.mul(acc, x);
        }
        acc == self.g.identity()
    }

    /// For a triangle with exactly one uncolored slot, the value its edge
    /// must take. `None` when no slot is free (doubled-edge cases).
    fn solve_third(&self, t: usize) -> Option<(usize, usize)> {
        let tri = &self.s.triangles[t];
        let free = (0..3).find(|&i| self.colors[tri[i].0].is_none())?;
        let mut prefix = self.g.identity();
        for &(e, fwd) in &tri[..free] {
            let c = self.colors[e].unwrap();
            prefix = self.g.mul(prefix, if fwd { c } else { self.g.inv(c) });
        }
        let mut suffix = self.g.identity();
        for &(e, fwd) in &tri[free + 1..] {
            let c = self.colors[e].unwrap();
            suffix = self.g.mul(suffix, if fwd { c } else { self.g.inv(c) });
        }
        // prefix · x · suffix = 1  ⇒  x = prefix⁻¹ · suffix⁻¹
        let x = self.g.mul(self.g.inv(prefix), self.g.inv(suffix));
        let (e, fwd) = tri[free];
        Some((e, if fwd { x } else { self.g.inv(x) }))
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            self.colors[e] = None;
            for idx in 0..self.edge_triangles[e].len() {
                let t = self.edge_triangles[e][idx];
                self.tri_colored[t] -= 1;
            }
        }
    }

    fn count(&mut self, next_branch: usize) -> u128 {
        let branch_pos = self.branch_order[next_branch..]
            .iter()
            .position(|&e| self.colors[e].is_none())
            .map(|offset| next_branch + offset);
        let Some(pos) = branch_pos else {
            // Everything colored; every triangle closed during propagation.
            return 1;
        };
        let edge = self.branch_order[pos];
        let mut total = 0u128;
        for value in 0..self.g.order() {
            let mark = self.trail.len();
            if self.assign(edge, value) {
                total += self.count(pos + 1);
            }
            self.undo_to(mark);
        }
        total
    }
}

/// Exact partition function by backtracking with constraint propagation.
pub fn partition_function(s: &Surface2D, g: &FiniteGroup) -> Rational {
    if s.edges.is_empty() {
        // Only the empty coloring; admissible iff there are no triangles
        // (a valid surface without edges has none).
        return z_from_count(1, g.order(), s.vertex_count);
    }
    let mut search = Search::new(s, g);
    let count = search.count(0);
    z_from_count(count, g.order(), s.vertex_count)
}

/// Number of admissible colorings (the numerator of Z before weighting).
pub fn admissible_count(s: &Surface2D, g: &FiniteGroup) -> u128 {
    if s.edges.is_empty() {
        return 1;
    }
    Search::new(s, g).count(0)
}

/// The 1→3 Pachner move: replaces one triangle by three around a fresh
/// central vertex. Adds one vertex, three edges, two triangles; χ is
/// unchanged.
pub fn pachner_13(s: &Surface2D, triangle: usize) -> Surface2D {
    assert!(triangle < s.triangles.len(), "triangle index out of range");
    let mut out = s.clone();
    let center = out.vertex_count;
    out.vertex_count += 1;
    let [s0, s1, s2] = s.triangles[triangle];
    let (v0, _) = s.slot_ends(s0);
    let (v1, _) = s.slot_ends(s1);
    let (v2, _) = s.slot_ends(s2);
    let e_base = out.edges.len();
    out.edges.push((v0, center)); // a
    out.edges.push((v1, center)); // b
    out.edges.push((v2, center)); // c
    let (a, b, c) = (e_base, e_base + 1, e_base + 2);
    out.triangles[triangle] = [s0, (b, true), (a, false)];
    out.triangles.push([s1, (c, true), (b, false)]);
    out.triangles.push([s2, (a, true), (c, false)]);
    out
}

/// Why a 2→2 move is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotFlippable {
    pub edge: usize,
    pub detail: String,
}

impl fmt::Display for NotFlippable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not-flippable: edge {}: {}", self.edge, self.detail)
    }
}

/// Rotates a triangle's slots so the slot using `edge` comes first.
fn rotate_to_edge(tri: &[Slot; 3], edge: usize) -> [Slot; 3] {
    let k = (0..3).find(|&i| tri[i].0 == edge).expect("edge belongs to triangle");
    [tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]]
}

/// The 2→2 Pachner move: the diagonal shared by two distinct triangles is
/// replaced by the opposite diagonal of their quadrilateral. Vertex, edge
/// and triangle counts are unchanged.
pub fn pachner_22(s: &Surface2D, edge: usize) -> Result<Surface2D, NotFlippable> {
    assert!(edge < s.edges.len(), "edge index out of range");
    let incident: Vec<usize> = s
        .triangles
        .iter()
        .enumerate()
        .filter(|(_, tri)| tri.iter().any(|&(e, _)| e == edge))
        .map(|(i, _)| i)
        .collect();
    if incident.len() != 2 {
        return Err(NotFlippable {
            edge,
            detail: "both slots of the edge lie in a single triangle".to_string(),
        });
    }
    let (ti, ui) = (incident[0], incident[1]);
    let shared: BTreeSet<usize> = s.triangles[ti]
        .iter()
        .map(|&(e, _)| e)
        .filter(|e| s.triangles[ui].iter().any(|&(e2, _)| e2 == *e))
        .collect();
    if shared.len() != 1 {
        return Err(NotFlippable {
            edge,
            detail: alloc::format!("the two incident triangles share {} edges", shared.len()),
        });
    }

    let t = rotate_to_edge(&s.triangles[ti], edge);
    let u = rotate_to_edge(&s.triangles[ui], edge);
    // t: x→y, y→p, p→x   (slot 0 traverses the edge x→y).
    // Relative traversal must be read off the direction flags: on a
    // self-loop the endpoints coincide, so vertex comparison cannot tell
    // the two sides of the edge apart.
    let (_, p) = s.slot_ends(t[1]);
    let (_, q) = s.slot_ends(u[1]);

    let mut out = s.clone();
    out.edges[edge] = (p, q);
    if u[0].1 != t[0].1 {
        // u traverses the edge y→x: u = yx, x→q, q→y.
        out.triangles[ti] = [t[1], (edge, true), u[2]]; // y→p, p→q, q→y
        out.triangles[ui] = [t[2], u[1], (edge, false)]; // p→x, x→q, q→p
    } else {
        // u traverses the edge the same way, x→y: u = xy, y→q, q→x;
        // attaching it flips u's remaining sides.
        out.triangles[ti] = [t[1], (edge, true), (u[1].0, !u[1].1)]; // y→p, p→q, q→y
        out.triangles[ui] = [t[2], (u[2].0, !u[2].1), (edge, false)]; // p→x, x→q, q→p
    }
    debug_assert_eq!(out.validate(), Ok(()));
    Ok(out)
}

/// One random Pachner move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Subdivide(usize),
    Flip(usize),
}

/// Edges on which a 2→2 move is currently legal.
pub fn flippable_edges(s: &Surface2D) -> Vec<usize> {
    (0..s.edges.len())
        .filter(|&e| {
            let incident: Vec<usize> = s
                .triangles
                .iter()
                .enumerate()
                .filter(|(_, tri)| tri.iter().any(|&(e2, _)| e2 == e))
                .map(|(i, _)| i)
                .collect();
            incident.len() == 2 && {
                let shared = s.triangles[incident[0]]
                    .iter()
                    .filter(|&&(e2, _)| s.triangles[incident[1]].iter().any(|&(e3, _)| e3 == e2))
                    .map(|&(e2, _)| e2)
                    .collect::<BTreeSet<_>>();
                shared.len() == 1
            }
        })
        .collect()
}

/// Applies `n` random valid Pachner moves with the given seed, returning
/// each move with the surface that follows it. Move kinds are drawn
/// uniformly whenever a flip is available.
pub fn apply_random_moves(s: &Surface2D, n: usize, seed: u64) -> Vec<(Move, Surface2D)> {
    let mut rng = SplitMix64::new(seed);
    let mut current = s.clone();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let flippable = flippable_edges(&current);
        let subdivide = flippable.is_empty() || rng.next_bool();
        let (mv, next) = if subdivide {
            let t = rng.next_below(current.triangles.len() as u64) as usize;
            (Move::Subdivide(t), pachner_13(&current, t))
        } else {
            let e = flippable[rng.next_below(flippable.len() as u64) as usize];
            (Move::Flip(e), pachner_22(&current, e).expect("edge was checked flippable"))
        };
        out.push((mv, next.clone()));
        current = next;
    }
    out
}

/// The two-triangle sphere on three vertices (a triangular pillowcase).
pub fn pillowcase_sphere() -> Surface2D {
    Surface2D {
        vertex_count: 3,
        edges: alloc::vec![(0, 1), (1, 2), (2, 0)],
        triangles: alloc::vec![
            [(0, true), (1, true), (2, true)],
            [(0, true), (1, true), (2, true)],
        ],
    }
}

/// The two-triangle torus on one vertex.
pub fn two_triangle_torus() -> Surface2D {
    Surface2D {
        vertex_count: 1,
        edges: alloc::vec![(0, 0), (0, 0), (0, 0)],
        triangles: alloc::vec![
            [(0, true), (1, true), (2, false)],
            [(1, true), (0, true), (2, false)],
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use alloc::vec;
    use num_traits::One;

    #[test]
    fn cyclic_two_is_xor() {
        let g = FiniteGroup::cyclic(2);
        assert_eq!(g.order(), 2);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(g.mul(a, b), a ^ b);
            }
        }
        assert!(g.is_abelian());
    }

    #[test]
    fn s3_is_a_nonabelian_group_of_order_six() {
        let g = FiniteGroup::symmetric_3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // A concrete non-commuting witness pair exists.
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
    }

    #[test]
    fn broken_associativity_is_reported() {
        // A magma with identity that is not associative.
        let table = vec![
            vec![0, 1, 2],
            vec![1, 2, 2],
            vec![2, 2, 1],
        ];
        let err = FiniteGroup::from_table(&table).unwrap_err();
        assert_eq!(err.axiom, "associativity");
    }

    #[test]
    fn missing_identity_is_reported() {
        let table = vec![vec![1, 0], vec![0, 1]];
        // 0 is not an identity (0·0 = 1); 1 is (1·a = a). Row/col of 1: 1·0=0 ✓ 1·1=1 ✓, 0·1=0 ✓.
        // So this IS a group with identity 1; use a genuinely broken table.
        assert!(FiniteGroup::from_table(&table).is_ok());
        let broken = vec![vec![1, 1], vec![1, 1]];
        let err = FiniteGroup::from_table(&broken).unwrap_err();
        assert_eq!(err.axiom, "identity");
    }

    #[test]
    fn bundled_surfaces_validate() {
        assert_eq!(pillowcase_sphere().validate(), Ok(()));
        assert_eq!(two_triangle_torus().validate(), Ok(()));
        assert_eq!(pillowcase_sphere().euler_characteristic(), 2);
        assert_eq!(two_triangle_torus().euler_characteristic(), 0);
    }

    #[test]
    fn identity_coloring_is_always_admissible() {
        for s in [pillowcase_sphere(), two_triangle_torus()] {
            for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric_3()] {
                let c = Coloring(vec![g.identity(); s.edges.len()]);
                assert!(is_admissible(&s, &g, &c));
            }
        }
    }

    #[test]
    fn pillowcase_admissibility_matches_hand_enumeration() {
        let s = pillowcase_sphere();
        let g = FiniteGroup::cyclic(2);
        // (1,1,0): 1+1+0 ≡ 0 mod 2.
        assert!(is_admissible(&s, &g, &Coloring(vec![1, 1, 0])));
        assert!(!is_admissible(&s, &g, &Coloring(vec![1, 0, 0])));
        // All 8 colorings: admissible iff x0+x1+x2 = 0; four such.
        let mut count = 0;
        for bits in 0..8u32 {
            let c = Coloring(vec![(bits & 1) as usize, (bits >> 1 & 1) as usize, (bits >> 2 & 1) as usize]);
            if is_admissible(&s, &g, &c) {
                count += 1;
            }
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn admissibility_is_rotation_independent() {
        // The triangle word starting at any slot is a conjugate, so the
        // identity condition cannot depend on the starting corner.
        let s = pillowcase_sphere();
        let g = FiniteGroup::symmetric_3();
        let mut rng = SplitMix64::new(11);
        for _ in 0..200 {
            let colors: Vec<usize> =
                (0..3).map(|_| rng.next_below(6) as usize).collect();
            let verdicts: Vec<bool> = (0..3)
                .map(|start| {
                    (0..s.triangles.len())
                        .all(|t| triangle_product(&s, &g, &colors, t, start) == g.identity())
                })
                .collect();
            assert!(verdicts.iter().all(|&v| v == verdicts[0]));
        }
    }

    #[test]
    fn pillowcase_partition_values() {
        let s = pillowcase_sphere();
        assert_eq!(partition_function(&s, &FiniteGroup::cyclic(2)), frac(1, 2));
        assert_eq!(partition_function(&s, &FiniteGroup::cyclic(3)), frac(1, 3));
        assert_eq!(partition_function(&s, &FiniteGroup::symmetric_3()), frac(1, 6));
    }

    #[test]
    fn torus_partition_values() {
        let s = two_triangle_torus();
        assert_eq!(partition_function(&s, &FiniteGroup::cyclic(2)), frac(2, 1));
        assert_eq!(partition_function(&s, &FiniteGroup::cyclic(3)), frac(3, 1));
        // 18 commuting pairs in S₃, weight 1/6.
        assert_eq!(partition_function(&s, &FiniteGroup::symmetric_3()), frac(3, 1));
    }

    #[test]
    fn backtracking_matches_naive_on_small_surfaces() {
        let groups = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric_3()];
        let mut surfaces = vec![pillowcase_sphere(), two_triangle_torus()];
        surfaces.push(pachner_13(&pillowcase_sphere(), 0));
        surfaces.push(pachner_13(&two_triangle_torus(), 1));
        for s in &surfaces {
            for g in &groups {
                let order = g.order() as u128;
                if order.pow(s.edges.len() as u32) <= 1_000_000 {
                    assert_eq!(partition_function(s, g), naive_partition_function(s, g));
                }
            }
        }
    }

    #[test]
    fn subdivision_counts_and_invariance() {
        let s = pillowcase_sphere();
        let s2 = pachner_13(&s, 0);
        assert_eq!(s2.validate(), Ok(()));
        assert_eq!((s2.vertex_count, s2.edges.len(), s2.triangles.len()), (4, 6, 4));
        assert_eq!(s2.euler_characteristic(), s.euler_characteristic());
        // Z is unchanged: still 1/2 over Z/2 (re-enumerated).
        let g = FiniteGroup::cyclic(2);
        assert_eq!(naive_partition_function(&s2, &g), frac(1, 2));
        assert_eq!(partition_function(&s2, &g), frac(1, 2));
    }

    #[test]
    fn flip_preserves_counts_and_z() {
        let s2 = pachner_13(&pillowcase_sphere(), 0);
        let flippable = flippable_edges(&s2);
        assert!(!flippable.is_empty());
        let e = flippable[0];
        let flipped = pachner_22(&s2, e).unwrap();
        assert_eq!(flipped.validate(), Ok(()));
        assert_eq!(flipped.vertex_count, s2.vertex_count);
        assert_eq!(flipped.edges.len(), s2.edges.len());
        assert_eq!(flipped.triangles.len(), s2.triangles.len());
        let g3 = FiniteGroup::cyclic(3);
        assert_eq!(
            naive_partition_function(&flipped, &g3),
            naive_partition_function(&s2, &g3)
        );
    }

    #[test]
    fn flipping_self_loops_preserves_the_torus() {
        // Every edge of the subdivided one-vertex torus that is flippable
        // includes self-loops; a flip that misreads the traversal direction
        // on a loop would produce a Klein bottle, whose Z over Z/3 is 1
        // rather than 3.
        let s = pachner_13(&two_triangle_torus(), 0);
        let g3 = FiniteGroup::cyclic(3);
        assert_eq!(partition_function(&s, &g3), frac(3, 1));
        for e in flippable_edges(&s) {
            let flipped = pachner_22(&s, e).unwrap();
            assert_eq!(
                partition_function(&flipped, &g3),
                frac(3, 1),
                "flip of edge {e} changed the topology"
            );
            assert_eq!(
                naive_partition_function(&flipped, &g3),
                frac(3, 1),
                "naive check after flipping edge {e}"
            );
        }
    }

    #[test]
    fn torus_diagonals_are_not_flippable() {
        let s = two_triangle_torus();
        for e in 0..3 {
            assert!(pachner_22(&s, e).is_err());
        }
        assert!(flippable_edges(&s).is_empty());
    }

    #[test]
    fn random_move_sequences_preserve_z() {
        let g = FiniteGroup::cyclic(2);
        for (start, expected) in [
            (pillowcase_sphere(), frac(1, 2)),
            (pachner_13(&two_triangle_torus(), 0), frac(2, 1)),
        ] {
            let moves = apply_random_moves(&start, 8, 0xA5A5_0001);
            assert_eq!(moves.len(), 8);
            for (_, surface) in &moves {
                assert_eq!(surface.validate(), Ok(()));
                assert_eq!(partition_function(surface, &g), expected);
            }
        }
    }

    #[test]
    fn multiplicativity_under_disjoint_union() {
        let a = pillowcase_sphere();
        let b = two_triangle_torus();
        let u = a.disjoint_union(&b);
        assert_eq!(u.validate(), Ok(()));
        for g in [FiniteGroup::cyclic(2), FiniteGroup::symmetric_3()] {
            assert_eq!(
                partition_function(&u, &g),
                partition_function(&a, &g) * partition_function(&b, &g)
            );
        }
    }

    #[test]
    fn partition_is_at_least_the_identity_weight() {
        // The all-identity coloring is admissible, so Z ≥ |G|^-V > 0.
        for s in [pillowcase_sphere(), two_triangle_torus()] {
            for g in [FiniteGroup::cyclic(3), FiniteGroup::symmetric_3()] {
                let z = partition_function(&s, &g);
                let floor = Rational::new(
                    BigInt::one(),
                    BigInt::from(g.order()).pow(s.vertex_count as u32),
                );
                assert!(z >= floor);
            }
        }
    }
}
