//! Resource ceilings shared by the constructions.

/// Environment variable overriding [`Limits::face_limit`].
pub const FACE_LIMIT_ENV: &str = "CLIQUE_POWERS_FACE_LIMIT";

pub const DEFAULT_FACE_LIMIT: usize = 10_000_000;
pub const DEFAULT_EXACT_TIER_FACES: usize = 200_000;
pub const DEFAULT_PATTERN_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of faces any single complex may have.
    pub face_limit: usize,
    /// Above this face count the automatic tier switches from integer
    /// Smith normal form to rational + mod-2 ranks.
    pub exact_tier_faces: usize,
    /// Maximum pattern size for brute-force induced subgraph search.
    pub pattern_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            face_limit: DEFAULT_FACE_LIMIT,
            exact_tier_faces: DEFAULT_EXACT_TIER_FACES,
            pattern_cap: DEFAULT_PATTERN_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the face ceiling taken from the environment when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(FACE_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().replace('_', "").parse::<usize>().ok())
        {
            limits.face_limit = v;
        }
        limits
    }

    pub fn with_face_limit(mut self, face_limit: usize) -> Self {
        self.face_limit = face_limit;
        self
    }
}
