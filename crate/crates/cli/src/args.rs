use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use detcount::oracles::DEFAULT_BUDGET;

#[derive(Debug, Parser)]
#[command(name = "detcount", version, about = "Exact enumeration of tilings, plane partitions and fully packed loops")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the output to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
    /// Step cap for brute-force enumerations.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: u64,
    /// Decimal digits for logarithms.
    #[arg(long, default_value_t = detcount::asymptotics::DEFAULT_DIGITS, global = true)]
    pub precision: u32,
    #[arg(short = 'a', global = true)]
    pub a: Option<usize>,
    #[arg(short = 'b', global = true)]
    pub b: Option<usize>,
    #[arg(short = 'c', global = true)]
    pub c: Option<usize>,
    #[arg(short = 'd', global = true)]
    pub d: Option<usize>,
    #[arg(short = 'e', global = true)]
    pub e: Option<usize>,
    #[arg(short = 'm', global = true)]
    pub m: Option<usize>,
    #[arg(short = 'p', global = true)]
    pub p: Option<usize>,
    #[arg(short = 'q', global = true)]
    pub q: Option<usize>,
    /// Report the full polynomial in mu instead of its value at mu = 1.
    #[arg(long, global = true)]
    pub mu: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tilings of the a x b x c hexagon.
    Hexagon,
    /// Lozenge glued along two edges (cyclically symmetric plane partitions).
    GluedLozenge,
    /// Half-hexagon glued along its cut.
    HalfHexagon,
    /// Dimension of the GL(a) module of a Young diagram.
    SchurDim(SchurDimArgs),
    /// Poincare polynomial P_a(u).
    Poincare,
    /// Hexagon with a central triangular hole of side m.
    HexHole,
    /// Hexagon with chopped corners under a ceiling m.
    HexChopped,
    /// Hexagon cut along a broken ceiling.
    HexBroken(BrokenArgs),
    /// Fully packed loops with nested arch bundles.
    #[command(subcommand)]
    Fpl(FplCommand),
    /// Volume generating functions.
    #[command(subcommand)]
    Q(QCommand),
    /// Brute-force enumerations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Growth of FPL counts.
    #[command(subcommand)]
    Asym(AsymCommand),
    /// Integer sequences for a = 1..max.
    Sequence(SequenceArgs),
    /// Cross-check suites; exit code 3 on any mismatch.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SchurDimArgs {
    /// Parts, e.g. `3,1`.
    #[arg(long, conflicts_with = "frobenius", required_unless_present = "frobenius")]
    pub partition: Option<String>,
    /// Frobenius coordinates, e.g. `1,3;1,2`.
    #[arg(long)]
    pub frobenius: Option<String>,
}

#[derive(Debug, Args)]
pub struct BrokenArgs {
    #[arg(long)]
    pub a1: usize,
    #[arg(long)]
    pub a2: usize,
    #[arg(long)]
    pub b1: usize,
    #[arg(long)]
    pub b2: usize,
    #[arg(long)]
    pub c1: usize,
    #[arg(long)]
    pub c2: usize,
}

#[derive(Debug, Subcommand)]
pub enum FplCommand {
    /// Three bundles (a, b, c).
    Nested3,
    /// Four bundles (a, b, c, d).
    Nested4,
    /// Five bundles (a, b | e | c, d).
    Nested5,
    /// Half-turn symmetric (a, b | e | b, a).
    Ht,
    /// Vertically symmetric, e odd.
    Vs,
    /// Symmetric under both reflections, e odd.
    Hvs,
}

#[derive(Debug, Subcommand)]
pub enum QCommand {
    Macmahon,
    /// Volume and winding, det(I + mu T T T).
    Hexagon,
    Cspp,
    HalfHexagon,
    Poincare,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Vertex-disjoint lattice path families.
    Paths(PathsArgs),
    /// Plane partitions in the a x b x c box, by volume.
    Pp,
    /// Cyclically symmetric plane partitions in the a-cube.
    Cspp,
    /// Sum of dim_Y u^|Y| over self-conjugate Y in the a x a square.
    SchurSum,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    /// Start points, e.g. `(3,1),(4,2)`.
    #[arg(long)]
    pub starts: String,
    #[arg(long)]
    pub ends: String,
    /// `none`, `wall`, `ceiling:M` or `broken:(x,y),...`.
    #[arg(long, default_value = "none")]
    pub constraint: String,
}

#[derive(Debug, Subcommand)]
pub enum AsymCommand {
    /// Reference counts of p bundles of r arches.
    Table1 {
        #[arg(long, default_value_t = 8)]
        max_p: usize,
        #[arg(long, default_value_t = 4)]
        max_r: usize,
    },
    /// Growth ratios for one (p, r).
    Ratio {
        #[arg(short = 'r')]
        r: usize,
    },
    /// Middle coefficient of det(x + T(2r)^2).
    FourArch {
        #[arg(short = 'r')]
        r: usize,
    },
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[arg(value_enum)]
    pub which: SequenceKind,
    #[arg(long, default_value_t = 8)]
    pub max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceKind {
    Tilglu,
    Tilhalf,
    Asm,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lgv,
    Identities,
    Q,
    Table1,
    All,
}
