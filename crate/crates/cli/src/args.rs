use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "metahecke", version, about = "Exact computations in the genuine Iwahori Hecke algebra of the 2-adic metaplectic cover")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Value of the genuine central character at -1.
    #[arg(long, global = true, default_value = "i", allow_hyphen_values = true)]
    pub gamma: String,
    /// Number of q-expansion coefficients for the forms commands.
    #[arg(long, global = true)]
    pub precision: Option<usize>,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cocycle identity and rational splitting on random samples.
    Cocycle {
        #[command(subcommand)]
        action: CocycleCmd,
    },
    /// Hecke algebra arithmetic and checks.
    Hecke {
        #[command(subcommand)]
        action: HeckeCmd,
    },
    /// The finite quotient K/K(4): group order, T_w matrix, multiplicities.
    Ktypes,
    /// Double cosets of K0 in the metaplectic group.
    Coset {
        #[command(subcommand)]
        action: CosetCmd,
    },
    /// Intertwining operator series against their closed forms.
    Intertwiner {
        #[command(subcommand)]
        action: IntertwinerCmd,
    },
    /// Half-integral weight forms on Gamma0(4).
    Forms {
        #[command(subcommand)]
        action: FormsCmd,
    },
    /// Principal series module at a given Satake parameter.
    Psmodule {
        /// Either a rational expression such as `3/2*sqrt2` or four comma-separated rationals `a,b,c,d` (coefficients of 1, z, z^2, z^3 with z a primitive 8th root of unity).
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CocycleCmd {
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum HeckeCmd {
    /// Product of two elements, e.g. `--lhs "T(1) + 2*U(0)"`.
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Defining relations and braid identities for labels in [-range, range].
    VerifyRelations {
        #[arg(long, default_value_t = 5)]
        range: i64,
    },
    /// The central element and its commutators.
    Center,
    /// Convolution of two Hecke functions at a group element, compared with the algebra product.
    Convolve {
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        /// Matrix entries a b c d of an SL2 element.
        #[arg(long, num_args = 4, allow_hyphen_values = true, value_names = ["A", "B", "C", "D"])]
        at: Vec<String>,
        /// Sign of the lift to the cover.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i8,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
pub enum LabelKind {
    #[value(name = "T")]
    T,
    #[value(name = "W")]
    W,
}

#[derive(Subcommand, Debug)]
pub enum CosetCmd {
    /// Double coset label of an SL2 element.
    Classify {
        #[arg(long, num_args = 4, allow_hyphen_values = true, value_names = ["A", "B", "C", "D"])]
        mat: Vec<String>,
    },
    /// Single coset representatives of a double coset.
    Decompose {
        #[arg(long, value_enum)]
        label: LabelKind,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum IntertwinerCmd {
    Verify {
        #[arg(long, default_value_t = 40)]
        order: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum FormsCmd {
    /// Echelon basis of a space of weight r/2.
    Basis {
        /// One of M, S, S+, S-.
        #[arg(long, allow_hyphen_values = true)]
        kind: String,
        #[arg(long)]
        r: i64,
    },
    /// Compatibility of T4+ and T_{p^2} with the integral weight side; one table row per r.
    Shimura {
        #[arg(long, num_args = 0..)]
        r: Vec<i64>,
    },
    /// Steinberg pieces of the minus space; one table row per r.
    Steinberg {
        #[arg(long, num_args = 0..)]
        r: Vec<i64>,
    },
}
