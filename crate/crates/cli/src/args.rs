use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Json,
}

/// Word problems, rewriting, automata, graphs of groups, pregroups, tree
/// decompositions and cuts of Cayley graphs.
#[derive(Debug, Parser)]
#[command(name = "bs", version, propagate_version = true)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Seed for randomized choices.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Rewriting / run step budget; overrides BS_FUEL.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub fuel: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(subcommand)]
    Rewrite(RewriteCmd),
    #[command(subcommand)]
    Lang(LangCmd),
    #[command(subcommand)]
    Gog(GogCmd),
    /// Word problem of a graph of groups: prints true or false.
    Wp {
        #[arg(long)]
        gog: PathBuf,
        word: String,
    },
    #[command(subcommand)]
    Pregroup(PregroupCmd),
    #[command(subcommand)]
    Cayley(CayleyCmd),
    #[command(subcommand)]
    Cuts(CutsCmd),
    /// Structure tree of the optimal cuts.
    StructureTree(PipelineArgs),
    /// Blocks of the structure tree.
    Blocks {
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Neighbourhood constant; the least admissible one by default.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        lambda: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RewriteCmd {
    /// Rewrite a word to normal form.
    Normalize {
        system: PathBuf,
        word: String,
        /// Redex selection strategy: leftmost, rightmost or random.
        #[arg(long, default_value = "leftmost")]
        strategy: String,
    },
    /// Check local and strong confluence.
    Confluence { system: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum LangCmd {
    /// Subset construction.
    Nfa2dfa { nfa: PathBuf },
    /// Grammar to push-down automaton.
    Cfg2pda { cfg: PathBuf },
    /// Push-down automaton to grammar.
    Pda2cfg { pda: PathBuf },
    /// Group presentation read off a grammar.
    Hotz { cfg: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum GogCmd {
    /// Word problem.
    Wp { gog: PathBuf, word: String },
    /// Normal form under the convergent system.
    NormalForm { gog: PathBuf, word: String },
    /// Presentation of the fundamental group.
    Present { gog: PathBuf },
    /// Ball of the Bass–Serre tree around the base vertex.
    Bst {
        gog: PathBuf,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Index and rank of the free subgroup from the permutation action.
    FreeSubgroup { gog: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum PregroupCmd {
    /// Check the axioms P1–P4.
    Check { pregroup: PathBuf },
    /// Pregroup carried by a graph of groups.
    FromGog { gog: PathBuf },
    /// Word problem of the universal group.
    Wp { pregroup: PathBuf, word: String },
}

/// A group backend and the generators of its Cayley graph.
#[derive(Debug, Args, Clone)]
pub struct GroupArgs {
    /// finite, free, gog or pregroup.
    #[arg(long, default_value = "gog")]
    pub backend: String,
    /// Input file, or inline text such as `cyclic 6` or `a b`.
    #[arg(long)]
    pub source: String,
    /// Generator, repeatable; the backend's default set if absent.
    #[arg(long = "gen")]
    pub generators: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub radius: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TdMethod {
    /// Level bags on the ball.
    Ms,
    /// Clique tree of the ball's interior, which must be chordal.
    Clique,
}

#[derive(Debug, Subcommand)]
pub enum CayleyCmd {
    /// Ball around the identity.
    Ball(GroupArgs),
    /// Tree decomposition of a ball.
    Td {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "ms")]
        method: TdMethod,
        /// Constant in the bag-diameter bound 3k.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Exact treewidth of a small graph file or ball.
    Treewidth {
        /// Graph file; otherwise the ball of --source.
        #[arg(long, conflicts_with = "source")]
        graph: Option<PathBuf>,
        #[arg(long, default_value = "gog")]
        backend: String,
        #[arg(long)]
        source: Option<String>,
        #[arg(long = "gen")]
        generators: Vec<String>,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CutsCmd {
    /// Cuts of bounded weight whose boundary meets the given vertices.
    Enum {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=6))]
        k: u64,
        /// Vertex label, repeatable; the identity by default.
        #[arg(long)]
        around: Vec<String>,
    },
    /// Are two cuts, given by side vertex labels, nested?
    Nested {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, num_args = 1.., required = true)]
        first: Vec<String>,
        #[arg(long, num_args = 1.., required = true)]
        second: Vec<String>,
    },
    /// Optimal cuts over a family of periodic paths.
    Optimal(PipelineArgs),
}

#[derive(Debug, Args, Clone)]
pub struct PipelineArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Period word of extra paths, repeatable. Generators of infinite order
    /// always contribute their axes.
    #[arg(long)]
    pub period: Vec<String>,
    /// Paths run through every vertex within this distance; radius/2 by
    /// default.
    #[arg(long)]
    pub spread: Option<usize>,
    /// Distance from the sphere kept clear by path tails; radius/4 by default.
    #[arg(long)]
    pub margin: Option<usize>,
    /// Accessibility bound; the largest minimal splitting weight by default.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=6))]
    pub k: Option<u64>,
}
