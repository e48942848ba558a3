/// How much a negative answer can be trusted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Certainty {
    /// The search provably completed.
    Exact,
    /// Color coding gave up after enough trials to bound the miss
    /// probability by `delta`.
    Randomized { delta: f64 },
}

impl Certainty {
    /// Combines two certainties; randomized evidence stays randomized and
    /// failure probabilities add up (union bound).
    pub fn and(self, other: Certainty) -> Certainty {
        match (self, other) {
            (Certainty::Exact, c) | (c, Certainty::Exact) => c,
            (Certainty::Randomized { delta: a }, Certainty::Randomized { delta: b }) => {
                Certainty::Randomized { delta: (a + b).min(1.0) }
            }
        }
    }
}

/// Three-valued search result. A budget overrun is never reported as
/// absence.
#[derive(Debug, Clone, PartialEq)]
pub enum Search<T> {
    Found(T),
    Absent(Certainty),
    Inconclusive,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Search::Absent(_))
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Search::Inconclusive)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent(c) => Search::Absent(c),
            Search::Inconclusive => Search::Inconclusive,
        }
    }
}
