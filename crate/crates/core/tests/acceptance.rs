//! One line per acceptance criterion. Runs without the libtest harness so that every line
//! is printed; exits nonzero if any blocking criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use cyclotam::arcdiag::{ftfsdl, kappa, noncrossing_diagrams, torsion_arcs};
use cyclotam::chains::*;
use cyclotam::lattice::quotient_to_affine;
use cyclotam::ncpart::{atam_sieve_poly, csp_verify, q_catalan, tincp_of_tree, CatalanKind};
use cyclotam::repfan::*;
use cyclotam::tibit::insertion_tree;
use cyclotam::tito::Pattern;
use cyclotam::{LatticeModel, ReflectionIndex, Tito, Variant};

type Outcome = Result<String, String>;

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(m: u64) -> u64 {
    binom(2 * m, m) / (m + 1)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

struct Lattices {
    cyc: Vec<LatticeModel>,
    aff: Vec<LatticeModel>,
}

impl Lattices {
    fn build() -> Lattices {
        let mk = |v| (2..=6).map(|n| LatticeModel::build(n, v).unwrap()).collect();
        Lattices { cyc: mk(Variant::Cyclic), aff: mk(Variant::Affine) }
    }

    fn get(&self, n: usize, v: Variant) -> &LatticeModel {
        match v {
            Variant::Cyclic => &self.cyc[n - 2],
            Variant::Affine => &self.aff[n - 2],
        }
    }
}

const BOTH: [Variant; 2] = [Variant::Cyclic, Variant::Affine];

fn c01_counting(_: &Lattices) -> Outcome {
    let mut sizes = (Vec::new(), Vec::new());
    for n in 2..=6u64 {
        let want_c = binom(2 * n, n);
        let want_a = (3 * n - 2) * binom(2 * n - 2, n - 1) / n;
        for (v, want) in [(Variant::Cyclic, want_c), (Variant::Affine, want_a)] {
            let l = LatticeModel::build(n as usize, v).map_err(|e| e.to_string())?;
            let diagrams = noncrossing_diagrams(n as usize, v);
            ensure(l.len() as u64 == want && diagrams.len() as u64 == want, || {
                format!("{v:?} n={n}: bfs {} backtracking {} want {want}", l.len(), diagrams.len())
            })?;
            ensure(diagrams.iter().all(|d| l.find(d).is_some()), || format!("{v:?} n={n}: diagram sets differ"))?;
            if v == Variant::Cyclic { sizes.0.push(want) } else { sizes.1.push(want) }
        }
    }
    Ok(format!("cyclic {:?}, affine {:?}", sizes.0, sizes.1))
}

fn c02_regularity(ls: &Lattices) -> Outcome {
    for n in 2..=6 {
        for v in BOTH {
            let l = ls.get(n, v);
            let bad = (0..l.len()).find(|&x| l.up_covers(x).len() + l.down_covers(x).len() != n);
            ensure(bad.is_none(), || format!("{v:?} n={n}: vertex {} has degree != n", bad.unwrap()))?;
        }
    }
    Ok("every Hasse vertex has degree n, n = 2..6".into())
}

fn c03_laws(ls: &Lattices) -> Outcome {
    for n in 2..=5 {
        for v in BOTH {
            let l = ls.get(n, v);
            ensure(l.check_lattice_laws(), || format!("{v:?} n={n}: lattice laws"))?;
            ensure(l.check_semidistributive(), || format!("{v:?} n={n}: semidistributivity"))?;
        }
    }
    for v in BOTH {
        ensure(ls.get(6, v).check_semidistributive_sampled(1_000_000, 6), || format!("{v:?} n=6 sampled"))?;
    }
    Ok("exhaustive n = 2..5, 10^6 sampled triples at n = 6".into())
}

fn c04_selfdual(ls: &Lattices) -> Outcome {
    for n in 2..=5 {
        for v in BOTH {
            let l = ls.get(n, v);
            let img: Vec<usize> = (0..l.len()).map(|x| l.antiautomorphism(x)).collect();
            ensure(img.iter().collect::<HashSet<_>>().len() == l.len(), || format!("{v:?} n={n}: not a bijection"))?;
            for (x, y) in l.covers() {
                ensure(l.up_covers(img[y]).contains(&img[x]), || format!("{v:?} n={n}: cover {x}<{y} not reversed"))?;
            }
        }
    }
    Ok("ω and π↓∘ω reverse every cover, n ≤ 5".into())
}

fn c05_quotient(ls: &Lattices) -> Outcome {
    for n in 2..=4 {
        let (c, a) = (ls.get(n, Variant::Cyclic), ls.get(n, Variant::Affine));
        let (map, fibers) = quotient_to_affine(c, a);
        for x in 0..c.len() {
            for y in 0..c.len() {
                ensure(map[c.join(x, y)] == a.join(map[x], map[y]), || format!("n={n}: join of {x},{y}"))?;
                ensure(map[c.meet(x, y)] == a.meet(map[x], map[y]), || format!("n={n}: meet of {x},{y}"))?;
            }
        }
        let mut doubles = 0;
        for f in &fibers {
            ensure(!f.is_empty() && f.len() <= 2, || format!("n={n}: fiber of size {}", f.len()))?;
            let lo = c.meet_all(f.iter().copied());
            let hi = c.join_all(f.iter().copied());
            let interval: BTreeSet<usize> = (0..c.len()).filter(|&z| c.leq(lo, z) && c.leq(z, hi)).collect();
            ensure(interval == f.iter().copied().collect(), || format!("n={n}: fiber {f:?} is not an interval"))?;
            doubles += usize::from(f.len() == 2);
        }
        let want = n as u64 * catalan(n as u64 - 1);
        ensure(doubles as u64 == want, || format!("n={n}: {doubles} two-element fibers, want {want}"))?;
    }
    Ok("joins and meets preserved, fibers are intervals of size ≤ 2, n·Cat_A(n−2) doubles, n ≤ 4".into())
}

fn c06_sublattice(ls: &Lattices) -> Outcome {
    for n in 2..=4 {
        let c = ls.get(n, Variant::Cyclic);
        let inv: Vec<BTreeSet<ReflectionIndex>> =
            c.elements().iter().map(|e| e.tito.inversions_window(3).into_iter().collect()).collect();
        for x in 0..c.len() {
            for y in 0..c.len() {
                let cap: BTreeSet<_> = inv[x].intersection(&inv[y]).copied().collect();
                let cup: BTreeSet<_> = inv[x].union(&inv[y]).copied().collect();
                ensure(inv[c.meet(x, y)] == cap, || format!("n={n}: Inv(meet {x},{y})"))?;
                ensure(inv[c.join(x, y)].is_superset(&cup), || format!("n={n}: Inv(join {x},{y})"))?;
                ensure(c.leq(x, y) == c.element(x).tito.leq(&c.element(y).tito), || format!("n={n}: order of {x},{y}"))?;
            }
        }
    }
    Ok("Inv(x∧y) = Inv x ∩ Inv y and Inv(x∨y) ⊇ Inv x ∪ Inv y, n ≤ 4".into())
}

fn c07_ftfsdl(ls: &Lattices) -> Outcome {
    for n in 2..=4 {
        for v in BOTH {
            let l = ls.get(n, v);
            for &r in l.jirr_labels() {
                let m = kappa(r, n).map_err(|e| e.to_string())?;
                let k = l.kappa_of(r).unwrap();
                // m_{a,b} is the 132-avoiding representative; the affine κ is its spine-flip image.
                let same = match v {
                    Variant::Cyclic => l.element(k).tree.reverse_post_order() == m,
                    Variant::Affine => l.find_tree(&insertion_tree(&m).pispine_down()) == Some(k),
                };
                ensure(same && m.avoids(Pattern::P132), || format!("{v:?} n={n}: κ(j_{r}) ≠ m_{r}"))?;
            }
            for &r1 in l.jirr_labels() {
                for &r2 in l.jirr_labels() {
                    let f = ftfsdl(r1, r2, n);
                    let (j1, j2) = (l.jirr_of(r1).unwrap(), l.jirr_of(r2).unwrap());
                    let (k1, k2) = (l.kappa_of(r1).unwrap(), l.kappa_of(r2).unwrap());
                    ensure(f.onto == l.leq(j1, j2), || format!("{v:?} n={n}: ↞ at {r1},{r2}"))?;
                    ensure(f.into == l.leq(k2, k1), || format!("{v:?} n={n}: ↪ at {r1},{r2}"))?;
                    ensure(f.to == !l.leq(j1, k2), || format!("{v:?} n={n}: → at {r1},{r2}"))?;
                }
            }
            // Maximal orthogonal pairs: T = JIs below x, F = JIs whose κ lies above x.
            let labels = l.jirr_labels();
            for x in 0..l.len() {
                let t: Vec<ReflectionIndex> = labels.iter().copied().filter(|&r| l.leq(l.jirr_of(r).unwrap(), x)).collect();
                let f: Vec<ReflectionIndex> = labels.iter().copied().filter(|&r| l.leq(x, l.kappa_of(r).unwrap())).collect();
                let f_from_t: Vec<ReflectionIndex> =
                    labels.iter().copied().filter(|&r| !t.iter().any(|&s| ftfsdl(s, r, n).to)).collect();
                let t_from_f: Vec<ReflectionIndex> =
                    labels.iter().copied().filter(|&s| !f.iter().any(|&r| ftfsdl(s, r, n).to)).collect();
                ensure(f == f_from_t && t == t_from_f, || format!("{v:?} n={n}: pair of {x} not maximal orthogonal"))?;
                ensure(l.join_all(t.iter().map(|&r| l.jirr_of(r).unwrap())) == x, || format!("{v:?} n={n}: ⋁T ≠ {x}"))?;
            }
        }
    }
    Ok("κ(j_ab) = m_ab, ↞/↪/→ match the index inequalities, elements recovered as ⋁T, n ≤ 4".into())
}

fn c08_row_orders(ls: &Lattices) -> Outcome {
    for n in 2..=5 {
        let got = ls.get(n, Variant::Cyclic).row_order();
        ensure(got == 2 * n, || format!("cyclic n={n}: order {got}"))?;
    }
    for (n, want) in [(3, 6), (4, 24), (5, 40)] {
        let got = ls.get(n, Variant::Affine).row_order();
        ensure(got == want, || format!("affine n={n}: order {got}, want {want}"))?;
    }
    Ok("cyclic order 2n (n = 2..5); affine order 6 at n = 3, 2n(n−1) at n = 4, 5".into())
}

fn c09_csp_cyclic(ls: &Lattices) -> Outcome {
    for n in 2..=5 {
        let c = ls.get(n, Variant::Cyclic);
        let f = q_catalan(CatalanKind::B, n).map_err(|e| e.to_string())?;
        let rep = csp_verify(c.len(), |x| c.rowmotion(x), 4 * n, &f).map_err(|e| e.to_string())?;
        ensure(rep.pass, || format!("n={n}: {:?}", rep.rows))?;
    }
    Ok("Row^k fixed points = Cat_B(ζ^k), ω = 4n, n = 2..5".into())
}

fn c10_csp_affine(ls: &Lattices) -> Outcome {
    for n in 2..=5 {
        let a = ls.get(n, Variant::Affine);
        let f = atam_sieve_poly(n).map_err(|e| e.to_string())?;
        let rep = csp_verify(a.len(), |x| a.rowmotion(x), 4 * n * (n - 1), &f).map_err(|e| e.to_string())?;
        ensure(rep.pass, || format!("n={n}: {:?}", rep.rows))?;
    }
    Ok("Row^k fixed points match the sieving polynomial, ω = 4n(n−1), n = 2..5".into())
}

fn c11_kreweras(ls: &Lattices) -> Outcome {
    for n in 2..=5 {
        let c = ls.get(n, Variant::Cyclic);
        let p: Vec<_> = c.elements().iter().map(|e| tincp_of_tree(&e.tree)).collect();
        for u in 0..c.len() {
            ensure(p[c.rowmotion(u)] == p[u].kreweras(), || format!("cyclic n={n}: element {u}"))?;
            ensure(p[u].kreweras().kreweras() == p[u].shift(-1), || format!("n={n}: Krew² at {u}"))?;
        }
        let a = ls.get(n, Variant::Affine);
        for u in 0..a.len() {
            let pu = tincp_of_tree(&a.element(u).tree);
            let want = pu.kreweras().pi_nc_down();
            ensure(tincp_of_tree(&a.element(a.rowmotion(u)).tree) == want, || format!("affine n={n}: element {u}"))?;
        }
    }
    Ok("𝒫∘Row = Krew∘𝒫 (cyclic), 𝒫∘Row = π↓∘Krew∘𝒫 (affine), Krew² = shift, n ≤ 5".into())
}

fn c12_chains(ls: &Lattices) -> Outcome {
    let mut out = Vec::new();
    for n in 2..=5 {
        let top = n * (n + 1) / 2;
        let (c, a) = (ls.get(n, Variant::Cyclic), ls.get(n, Variant::Affine));
        let (sc, sa) = (length_spectrum(c), length_spectrum(a));
        ensure(sc.lengths() == (2 * n - 1..=top).collect::<Vec<_>>(), || format!("cyclic n={n}: {:?}", sc.lengths()))?;
        ensure(sa.lengths() == (2 * n - 2..top).collect::<Vec<_>>(), || format!("affine n={n}: {:?}", sa.lengths()))?;
        let path = witness_in_lattice(a).map_err(|e| e.to_string())?;
        ensure(path.len() == top, || format!("n={n}: witness has length {}", path.len() - 1))?;
        out.push(format!("[{},{}]/[{},{}]", sc.min(), sc.max(), sa.min(), sa.max()));
    }
    Ok(format!("cyclic/affine spectra {}; witness chains are maximal chains of length C(n+1,2)−1", out.join(" ")))
}

fn c13_ornamentations(ls: &Lattices) -> Outcome {
    for n in 2..=5u64 {
        let count = ornamentations(n as usize).map_err(|e| e.to_string())?.len() as u64;
        let want = (3 * n - 2) * binom(2 * n - 2, n - 1) / n;
        ensure(count == want, || format!("n={n}: {count} ornamentations, want {want}"))?;
        let iso = orn_poset_iso_check(ls.get(n as usize, Variant::Affine)).map_err(|e| e.to_string())?;
        ensure(iso, || format!("n={n}: not an isomorphism"))?;
    }
    Ok("|𝒪(n)| = Cat_D(n) and orn_to_arcs is an order isomorphism, n ≤ 5".into())
}

fn c14_worked_example(_: &Lattices) -> Outcome {
    let n = 7;
    let ri = |a, b| ReflectionIndex::new(a, b, n);
    let t = insertion_tree(&Tito::parse("[4,3,15][~6][~9,5,7]", n).map_err(|e| e.to_string())?);
    let po = t.post_order();
    let mut lower = vec![ri(0, 2), ri(2, 7), ri(3, 4), ri(5, 6)];
    lower.sort();
    ensure(po.lower_walls() == lower, || format!("lower walls {:?}", po.lower_walls()))?;
    let up = t.pispine_up().reverse_post_order();
    let mut upper = vec![ri(1, 2), ri(3, 5), ri(5, 7)];
    upper.sort();
    ensure(up.upper_walls() == upper, || format!("upper walls {:?}", up.upper_walls()))?;
    let rows = [
        [1, 0, 0, 0, -1, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [0, 1, 1, 0, 0, -1, 0],
        [0, 1, 0, 0, 0, -1, 0],
        [0, 1, 0, 1, 0, 0, -1],
        [0, 1, 0, 0, 0, 0, -1],
        [1, 0, 0, 0, 0, 0, 0],
    ];
    let want_cols: BTreeSet<Vec<i64>> = (0..7).map(|j| (0..7).map(|i| rows[i][j]).collect()).collect();
    let c = c_matrix(&t).map_err(|e| e.to_string())?;
    ensure(c.iter().cloned().collect::<BTreeSet<_>>() == want_cols, || format!("C matrix {c:?}"))?;
    let g = g_from_cmatrix(&t).map_err(|e| e.to_string())?;
    let v = |a: Option<i64>, b: Option<i64>| GVector::varpi(a, b, n);
    let want_g: BTreeSet<GVector> = [
        v(Some(7), None),
        v(Some(2), None),
        v(Some(3), Some(4)),
        v(Some(5), Some(6)),
        v(Some(7), Some(8)),
        v(Some(2), Some(4)),
        v(Some(2), Some(6)),
    ]
    .into_iter()
    .collect();
    ensure(g == want_g, || format!("g-vectors {g:?}"))?;
    let mut tri = vec![];
    for (a, b) in [(7, 13), (2, 8), (3, 4), (5, 6), (7, 8), (2, 4), (2, 6)] {
        tri.push(TaggedArc::plain(a, b, n).map_err(|e| e.to_string())?);
    }
    tri.sort();
    ensure(triangulation_of_tree(&t).map_err(|e| e.to_string())? == tri, || "triangulation".into())?;
    let names: Vec<String> = g.iter().map(|x| x.to_string()).collect();
    Ok(format!("walls, C, (C^T)^-1 and triangulation reproduced; g = {}", names.join(", ")))
}

fn c15_triangulations(ls: &Lattices) -> Outcome {
    for n in 2..=5 {
        let a = ls.get(n, Variant::Affine);
        let mut tris = Vec::new();
        for e in a.elements() {
            let t = &e.tree;
            let tri = triangulation_of_tree(t).map_err(|x| x.to_string())?;
            ensure(tri.len() == n, || format!("n={n} {}: {} arcs", e.tito, tri.len()))?;
            ensure(tri.iter().all(|&x| tri.iter().all(|&y| tagged_compatible(x, y, n))), || format!("n={n} {}: incompatible", e.tito))?;
            let from_tri: BTreeSet<GVector> = tri.iter().map(|&x| g_vector(x, n)).collect();
            let from_z: BTreeSet<GVector> = (1..=n as i64).map(|z| varpi_tz(t, z)).collect();
            let from_c = g_from_cmatrix(t).map_err(|x| x.to_string())?;
            ensure(from_tri == from_z && from_tri == from_c, || format!("n={n} {}: g-vectors disagree", e.tito))?;
            let set: BTreeSet<TaggedArc> = tri.into_iter().collect();
            for x in TaggedArc::all(n) {
                let g = ThetaVector(g_vector(x, n).0);
                let in_cone = theta_compatible(&g, t) || theta_compatible(&g, &t.pispine_up());
                ensure(in_cone == set.contains(&x), || format!("n={n} {}: cone membership of {x}", e.tito))?;
            }
            tris.push(set);
        }
        for x in 0..a.len() {
            for y in x + 1..a.len() {
                let flip = tris[x].intersection(&tris[y]).count() == n - 1;
                let adjacent = a.up_covers(x).contains(&y) || a.down_covers(x).contains(&y);
                ensure(flip == adjacent, || format!("n={n}: flip graph differs at {x},{y}"))?;
            }
        }
    }
    Ok("n compatible arcs, flip graph = Hasse diagram, three g-vector routes agree, g(𝔟) ∈ cone(T) iff 𝔟 ∈ T (sign: g, not −g), n ≤ 5".into())
}

fn c16_stability(ls: &Lattices) -> Outcome {
    for n in 2..=4 {
        for e in ls.get(n, Variant::Affine).elements() {
            let t = &e.tree;
            let theta = make_regular_theta(t).map_err(|x| x.to_string())?;
            let want = torsion_arcs(&t.pispine_down().post_order(), Variant::Affine).map_err(|x| x.to_string())?;
            ensure(torsion_from_theta(&theta).map_err(|x| x.to_string())? == want, || format!("n={n} {}", e.tito))?;
            for th in sample_regular_thetas(t, 10, 16).map_err(|x| x.to_string())? {
                ensure(t.post_order().lower_walls().iter().all(|w| th.at(w.a) > th.at(w.b)), || format!("n={n} {}: lower wall sign", e.tito))?;
                let up = t.pispine_up().reverse_post_order();
                ensure(up.upper_walls().iter().all(|w| th.at(w.a) < th.at(w.b)), || format!("n={n} {}: upper wall sign", e.tito))?;
            }
        }
    }
    Ok("torsion_from_theta(make_regular_theta(T)) = T, 10 sampled θ per element pass wall signs, n ≤ 4".into())
}

fn c17_conjecture(ls: &Lattices) -> Outcome {
    let parts: Vec<String> = (2..=5).map(|n| conjecture_report(ls.get(n, Variant::Affine)).to_string()).collect();
    Ok(format!("report only: {}", parts.join("; ")))
}

fn main() {
    let started = Instant::now();
    let ls = Lattices::build();
    let criteria: [(&str, fn(&Lattices) -> Outcome, bool); 17] = [
        ("counting", c01_counting, true),
        ("regularity", c02_regularity, true),
        ("lattice laws and semidistributivity", c03_laws, true),
        ("self-duality", c04_selfdual, true),
        ("affine quotient", c05_quotient, true),
        ("sublattice inversion sets", c06_sublattice, true),
        ("kappa and FTFSDL", c07_ftfsdl, true),
        ("rowmotion orders", c08_row_orders, true),
        ("cyclic sieving, cyclic", c09_csp_cyclic, true),
        ("cyclic sieving, affine", c10_csp_affine, true),
        ("Kreweras conjugation", c11_kreweras, true),
        ("chain spectra", c12_chains, true),
        ("ornamentation model", c13_ornamentations, true),
        ("worked n = 7 example", c14_worked_example, true),
        ("triangulations and g-vectors", c15_triangulations, true),
        ("stability cones", c16_stability, true),
        ("minimum-chain conjecture", c17_conjecture, false),
    ];
    let mut failed = Vec::new();
    for (i, (name, f, blocking)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = f(&ls);
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                let tag = if *blocking { "FAIL" } else { "NOTE" };
                println!("criterion {:>2} {tag} {name} ({secs:.2}s): {why}", i + 1);
                if *blocking {
                    failed.push(i + 1);
                }
            }
        }
    }
    println!("acceptance: {} blocking failures, {:.1}s total", failed.len(), started.elapsed().as_secs_f64());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
