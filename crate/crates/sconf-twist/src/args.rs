use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "sconf-twist", version, about = "Exact computations with twisting supercharges of superconformal algebras")]
pub struct Cli {
    /// Seed for every sampled suite.
    #[arg(long, global = true, default_value_t = sconf_core::sample::DEFAULT_SEED)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Report `elapsed_ms` as 0 so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Build and inspect superalgebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Classify and construct supercharges.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Closed subalgebras and exact ideals.
    #[command(subcommand)]
    Centralizer(CentralizerCmd),
    /// Real forms and Hermitian orbit labels.
    #[command(subcommand)]
    Realform(RealformCmd),
    /// Verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// sl4k, psl44, osp or f4.
    #[arg(long)]
    pub family: String,
    /// Number of supersymmetries (ignored for psl44 and f4).
    #[arg(long)]
    pub k: Option<usize>,
    /// Symplectic size for osp; 4 for 3d, 2 or 4 with k = 8 for 6d.
    #[arg(long, default_value_t = 4)]
    pub two_n: usize,
}

#[derive(Args, Debug, Clone)]
pub struct SuperchargeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// 4d: `k x 4` block, matrix literal or `zero`.
    #[arg(long)]
    pub qplus: Option<String>,
    /// 4d: `4 x k` block, matrix literal or `zero`.
    #[arg(long)]
    pub qminus: Option<String>,
    /// osp: `2n x k` block of `Q (x) w` rows.
    #[arg(long)]
    pub block: Option<String>,
    /// f4: first spinor as a one-row literal.
    #[arg(long)]
    pub q1: Option<String>,
    /// f4: second spinor as a one-row literal.
    #[arg(long)]
    pub q2: Option<String>,
    /// Supercharge JSON document; overrides the literal flags.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Structure constants as a versioned JSON document.
    Dump(FamilyArgs),
    /// Graded antisymmetry, parity and super Jacobi on all basis triples.
    Verify(FamilyArgs),
}

#[derive(Subcommand, Debug)]
pub enum TwistCmd {
    /// Orbit label of a square-zero supercharge.
    Classify(SuperchargeArgs),
    /// Canonical 4d representative with the given rank pair.
    Canonical {
        #[arg(long)]
        k: usize,
        /// Rank of the `Q+` block.
        #[arg(long)]
        r: usize,
        /// Rank of the `Q-` block.
        #[arg(long, default_value_t = 0)]
        r_minus: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CentralizerCmd {
    /// Closed subalgebra and exact ideal of a supercharge.
    Compute(SuperchargeArgs),
    /// Chiral rank-r cell against its closed forms.
    Chiral {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Block patterns of the Schur supercharge.
    Schur,
    /// Rank (1,1) supercharge against its stated patterns.
    Rank11 {
        #[arg(long)]
        k: usize,
    },
    /// The osp(2|4) example with its parabolic basis.
    OspExample,
    /// Rank-one osp(k|4) supercharge.
    OspRank1 {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum RealformCmd {
    /// Real loci of the Schur closed and exact parts.
    Schur {
        /// `4,0`, `3,1`, `2,2` or a name.
        #[arg(long)]
        signature: String,
    },
    /// Hermitian orbit label of a 2-plane in C^4 for the split form.
    Label {
        /// `2 x 4` matrix literal whose rows span the plane.
        #[arg(long)]
        plane: String,
    },
    /// Kernel of a chiral `Q+` block as a Grassmannian point.
    KernelFiber {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        qplus: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Every criterion, keyed by claim.
    All {
        /// Perturb expected values of claims with this key prefix.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
        /// Comma-separated criterion ids to run (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
    /// Chiral centralizer dimensions as a Markdown table.
    Tables {
        /// Range `a..b` (inclusive) or a comma list.
        #[arg(long, default_value = "1..8")]
        k: String,
    },
}
