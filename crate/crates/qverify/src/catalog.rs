//! The shipped identity catalog: stable IDs and their desk-scale default
//! instances. Orders are chosen by cost class so the whole batch stays
//! well under the wall-clock budget on a laptop.

use crate::instance::IdentityInstance;

/// Every identity id the catalog must cover, enforced by a meta-test.
pub const REQUIRED_IDS: &[&str] = &[
    "JTP",
    "THETA-ROWSUM",
    "THETA-SHIFT-A",
    "THETA-SHIFT-B",
    "THETA-SHIFT-C",
    "THETA-SHIFT-D",
    "FUNC-EQ",
    "T1-CLOSED",
    "HT-U-TRIPLE",
    "HT-U-APPELL",
    "MAIN",
    "MAIN-ALT",
    "COR-MAIN",
    "U2M1",
    "U2M2",
    "U3M1",
    "U3M2",
    "U3M3",
    "THETA-TO-FABC",
    "INTERESTING",
    "THETA11",
    "THETA11-STAR",
    "U-EQ-F123",
    "M1-417",
    "V-ELLIPTIC",
    "Y-ELLIPTIC",
    "Y-EXPANSION",
    "NEWCALC",
    "APPELL-F123",
    "MODTHETA-F123",
    "HM-24E",
    "SEC8-THETA",
    "SEC8-NOTHETA",
    "G-APPELL",
    "ANDREWS",
    "H-G-DUAL",
];

/// The default desk-scale manifest.
pub fn default_catalog() -> Vec<IdentityInstance> {
    let mut v = Vec::new();
    let ins = IdentityInstance::new;

    // Triple product on seeded random monomial arguments.
    v.push(ins("JTP", 40).with_seed(0x0A11_CE5E, 20));

    // Bilateral row/column sums vanish.
    for t in [2, 3] {
        v.push(ins("THETA-ROWSUM", 30).with_t(t));
    }

    // The four shift relations, theta and starred forms.
    for id in [
        "THETA-SHIFT-A",
        "THETA-SHIFT-B",
        "THETA-SHIFT-C",
        "THETA-SHIFT-D",
    ] {
        for t in [2, 3] {
            v.push(ins(id, 30).with_t(t));
        }
    }

    // Functional equation residual.
    for (t, m) in [(2, 1), (3, 1), (3, 2)] {
        v.push(
            ins("FUNC-EQ", 25)
                .with_t(t)
                .with_m(m)
                .with_clearing("(q)_inf^3"),
        );
    }

    // t = 1 closed form.
    for m in [1, 2, 3] {
        v.push(ins("T1-CLOSED", 30).with_m(m));
    }

    // The two Hecke--Appell forms of the U-series.
    for (t, m) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        v.push(
            ins("HT-U-TRIPLE", 20)
                .with_t(t)
                .with_m(m)
                .with_clearing("(1-x) (q)_inf^2"),
        );
        v.push(
            ins("HT-U-APPELL", 20)
                .with_t(t)
                .with_m(m)
                .with_clearing("(q)_inf^3"),
        );
    }

    // The theta-weighted expansions of (q)_inf^3 f_{t,m}.
    for (t, m) in [(2, 1), (3, 1), (3, 2)] {
        v.push(
            ins("MAIN", 20)
                .with_t(t)
                .with_m(m)
                .with_clearing("(q)_inf^3 q^{t/4}"),
        );
        v.push(
            ins("MAIN-ALT", 20)
                .with_t(t)
                .with_m(m)
                .with_clearing("(q)_inf^3"),
        );
    }

    // Product-of-double-sums expansions.
    for (t, m, order) in [(2, 1, 15), (3, 1, 12), (3, 2, 12)] {
        v.push(
            ins("COR-MAIN", order)
                .with_t(t)
                .with_m(m)
                .with_clearing("(q)_inf^3"),
        );
    }
    for (id, t, m, order) in [
        ("U2M1", 2, 1, 15),
        ("U2M2", 2, 2, 15),
        ("U3M1", 3, 1, 12),
        ("U3M2", 3, 2, 12),
        ("U3M3", 3, 3, 12),
    ] {
        v.push(
            ins(id, order)
                .with_t(t)
                .with_m(m)
                .with_clearing("(q)_inf^3"),
        );
    }

    // theta_{p,m} as a pair of double sums, on a (p, m) grid.
    for t in [2, 3] {
        v.push(ins("THETA-TO-FABC", 30).with_t(t));
    }

    // The theta-star block sum case table.
    for l in 0..=4 {
        v.push(ins("INTERESTING", 20).with_t(2).with_m(1).with_l(l));
    }

    v.push(ins("THETA11", 100).with_t(2));
    v.push(ins("THETA11-STAR", 30).with_t(2));

    v.push(ins("U-EQ-F123", 30).with_clearing("(q)_inf"));
    v.push(ins("M1-417", 30));

    for t in [2, 3] {
        v.push(ins("V-ELLIPTIC", 20).with_t(t));
        v.push(ins("Y-ELLIPTIC", 20).with_t(t));
        v.push(ins("Y-EXPANSION", 20).with_t(t));
    }

    v.push(
        ins("NEWCALC", 12)
            .with_t(2)
            .with_m(1)
            .with_clearing("Theta(-x^3; q^3)"),
    );

    // Specializations. sigma = +1 keeps Theta(-x^3;q^3) away from its zeros;
    // the Eulerian/theta form needs quarter-lattice points and the
    // universal-mock-theta form needs half-lattice points.
    for j in [1, 2] {
        v.push(ins("APPELL-F123", 25).with_point(1, 1, j));
    }
    for (qsub, sigma, j) in [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, -1, 1)] {
        v.push(ins("MODTHETA-F123", 25).with_point(qsub, sigma, j));
    }
    for (sigma, j) in [(1, 1), (1, 2), (-1, 1), (-1, 2)] {
        v.push(ins("HM-24E", 25).with_point(1, sigma, j));
    }
    for (sigma, j) in [(1, 1), (1, 3), (-1, 1), (-1, 3)] {
        v.push(ins("SEC8-THETA", 25).with_point(4, sigma, j));
    }
    for (sigma, j) in [(-1, 1), (-1, 2)] {
        v.push(ins("SEC8-NOTHETA", 25).with_point(1, sigma, j));
    }
    for (sigma, j) in [(1, 1), (1, 3), (-1, 1), (-1, 3)] {
        v.push(ins("G-APPELL", 25).with_point(2, sigma, j));
    }

    // Andrews multi-sum identity.
    for (k, i) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
        v.push(ins("ANDREWS", 20).with_k(k).with_i(i));
    }

    // Reciprocal duality between the chain polynomials and the finitized
    // partition generating functions (full small grid inside the check).
    v.push(ins("H-G-DUAL", 0));

    v
}

/// Default instances for a single id (used by the single-id CLI path).
pub fn defaults_for(id: &str) -> Vec<IdentityInstance> {
    default_catalog()
        .into_iter()
        .filter(|i| i.id == id)
        .collect()
}
