//! The per-n verification table behind `cyclotam verify`.

use std::collections::BTreeSet;

use cyclotam::arcdiag::torsion_arcs;
use cyclotam::chains::{length_spectrum, orn_poset_iso_check, ornamentations, witness_in_lattice};
use cyclotam::lattice::quotient_to_affine;
use cyclotam::ncpart::{atam_sieve_poly, csp_verify, q_catalan, tincp_of_tree, CatalanKind};
use cyclotam::repfan::{g_from_cmatrix, g_vector, make_regular_theta, tagged_compatible, torsion_from_theta, triangulation_of_tree, varpi_tz, GVector};
use cyclotam::{LatticeModel, Variant};

pub struct Row {
    pub name: &'static str,
    pub mode: String,
    pub pass: bool,
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn mode(exhaustive: bool) -> String {
    if exhaustive { "exhaustive" } else { "sampled" }.to_string()
}

/// Runs every suite at this `n`; suites whose exhaustive cost grows past `limit` fall back
/// to `samples` random checks drawn from `seed`.
pub fn run(n: usize, limit: usize, seed: u64, samples: usize) -> anyhow::Result<Vec<Row>> {
    let c = LatticeModel::build(n, Variant::Cyclic)?;
    let a = LatticeModel::build(n, Variant::Affine)?;
    let full = n <= limit;
    let nn = n as u64;
    let mut rows = Vec::new();
    let mut push = |name, mode: String, pass| rows.push(Row { name, mode, pass });

    push(
        "Catalan counts",
        mode(true),
        c.len() as u64 == binom(2 * nn, nn) && a.len() as u64 == (3 * nn - 2) * binom(2 * nn - 2, nn - 1) / nn,
    );
    push(
        "n-regular Hasse diagrams",
        mode(true),
        [&c, &a].iter().all(|l| (0..l.len()).all(|x| l.up_covers(x).len() + l.down_covers(x).len() == n)),
    );
    let sd = |l: &LatticeModel| if full { l.check_semidistributive() } else { l.check_semidistributive_sampled(samples, seed) };
    push("lattice laws", mode(true), c.check_lattice_laws() && a.check_lattice_laws());
    push("semidistributivity", mode(full), sd(&c) && sd(&a));
    push("self-duality", mode(true), c.check_selfdual() && a.check_selfdual());

    let (map, fibers) = quotient_to_affine(&c, &a);
    let pairs: Vec<(usize, usize)> = if full {
        (0..c.len()).flat_map(|x| (0..c.len()).map(move |y| (x, y))).collect()
    } else {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        (0..samples).map(|_| (rand::Rng::gen_range(&mut rng, 0..c.len()), rand::Rng::gen_range(&mut rng, 0..c.len()))).collect()
    };
    let hom = pairs.iter().all(|&(x, y)| map[c.join(x, y)] == a.join(map[x], map[y]) && map[c.meet(x, y)] == a.meet(map[x], map[y]));
    let doubles = fibers.iter().filter(|f| f.len() == 2).count() as u64;
    let cat_a = binom(2 * nn - 2, nn - 1) / nn;
    push("spine-flip quotient", mode(full), hom && fibers.iter().all(|f| (1..=2).contains(&f.len())) && doubles == nn * cat_a);

    let affine_order = if n == 3 { 6 } else { 2 * n * (n - 1) };
    push("rowmotion order", mode(true), c.row_order() == 2 * n && (n == 2 || a.row_order() == affine_order));
    let csp_c = csp_verify(c.len(), |x| c.rowmotion(x), 4 * n, &q_catalan(CatalanKind::B, n)?).map(|r| r.pass).unwrap_or(false);
    push("cyclic sieving (cyclic)", mode(true), csp_c);
    let csp_a = csp_verify(a.len(), |x| a.rowmotion(x), 4 * n * (n - 1), &atam_sieve_poly(n)?).map(|r| r.pass).unwrap_or(false);
    push("cyclic sieving (affine)", mode(true), csp_a);

    let p: Vec<_> = c.elements().iter().map(|e| tincp_of_tree(&e.tree)).collect();
    let krew_c = (0..c.len()).all(|u| p[c.rowmotion(u)] == p[u].kreweras() && p[u].kreweras().kreweras() == p[u].shift(-1));
    let krew_a = (0..a.len()).all(|u| {
        tincp_of_tree(&a.element(a.rowmotion(u)).tree) == tincp_of_tree(&a.element(u).tree).kreweras().pi_nc_down()
    });
    push("Kreweras conjugation", mode(true), krew_c && krew_a);

    let top = n * (n + 1) / 2;
    let (sc, sa) = (length_spectrum(&c), length_spectrum(&a));
    let spectra = sc.lengths() == (2 * n - 1..=top).collect::<Vec<_>>() && sa.lengths() == (2 * n - 2..top).collect::<Vec<_>>();
    push("maximal chain lengths", mode(true), spectra && witness_in_lattice(&a).is_ok());
    let orn = ornamentations(n)?.len() == a.len() && (!full || orn_poset_iso_check(&a)?);
    push("ornamentation model", mode(full), orn);

    let mut tri_ok = true;
    let mut stab_ok = true;
    let mut tris = Vec::with_capacity(a.len());
    for e in a.elements() {
        let t = &e.tree;
        let tri = triangulation_of_tree(t)?;
        let from_tri: BTreeSet<GVector> = tri.iter().map(|&x| g_vector(x, n)).collect();
        let from_z: BTreeSet<GVector> = (1..=n as i64).map(|z| varpi_tz(t, z)).collect();
        tri_ok &= tri.len() == n
            && tri.iter().all(|&x| tri.iter().all(|&y| tagged_compatible(x, y, n)))
            && from_tri == from_z
            && g_from_cmatrix(t).map(|g| g == from_tri).unwrap_or(false);
        tris.push(tri.into_iter().collect::<BTreeSet<_>>());
        let want = torsion_arcs(&t.post_order(), Variant::Affine)?;
        stab_ok &= make_regular_theta(t).ok().and_then(|th| torsion_from_theta(&th).ok()) == Some(want);
    }
    if full {
        for x in 0..a.len() {
            for y in x + 1..a.len() {
                let adjacent = a.up_covers(x).contains(&y) || a.down_covers(x).contains(&y);
                tri_ok &= (tris[x].intersection(&tris[y]).count() == n - 1) == adjacent;
            }
        }
    }
    push("triangulations and g-vectors", mode(full), tri_ok);
    push("stability cones", mode(true), stab_ok);
    Ok(rows)
}
