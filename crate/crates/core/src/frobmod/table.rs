use serde::Serialize;

/// One computed value `gHK(M, q)`, `q = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GhkRow {
    pub e: u32,
    pub q: u64,
    pub length: u64,
}

/// A row that was skipped because it ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsentRow {
    pub e: u32,
    pub q: u64,
    pub reason: String,
}

/// Values of the generalized Hilbert-Kunz function, by increasing exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GhkTable {
    pub p: u64,
    /// Human-readable ring and module, e.g. `F_7[x, y, z]/(x^3 + y^3 + z^3)`.
    pub ring: String,
    pub module: String,
    pub rows: Vec<GhkRow>,
    pub absent: Vec<AbsentRow>,
}

impl GhkTable {
    pub fn new(p: u64) -> Self {
        GhkTable {
            p,
            ring: String::new(),
            module: String::new(),
            rows: Vec::new(),
            absent: Vec::new(),
        }
    }

    /// Builds a table from `(e, length)` pairs, e.g. values read back from a file.
    pub fn from_lengths(p: u64, values: &[(u32, u64)]) -> Self {
        let mut t = GhkTable::new(p);
        t.rows = values
            .iter()
            .map(|&(e, length)| GhkRow { e, q: p.pow(e), length })
            .collect();
        t.rows.sort_by_key(|r| r.e);
        t
    }

    pub fn length(&self, e: u32) -> Option<u64> {
        self.rows.iter().find(|r| r.e == e).map(|r| r.length)
    }

    /// `e,q,length` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("e,q,length\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.e, r.q, r.length));
        }
        out
    }
}
