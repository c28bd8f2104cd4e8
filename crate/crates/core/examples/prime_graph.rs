//! Builds the prime graph of a group from its element orders and prints it
//! in Graphviz format. Pass a group name to override the default.

use sgq::catalog::GroupDescriptor;
use sgq::data::DataDir;
use sgq::lab::Lab;
use sgq::prime_graph::build_prime_graph;

fn main() -> sgq::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "M11".into());
    let d: GroupDescriptor = name.parse()?;
    let lab = Lab::new(DataDir::from_env());
    let census = lab.census(&d)?;
    let graph = build_prime_graph(&census.counts().keys().copied().collect())?;

    eprintln!("{d}: {} connected components", graph.component_count());
    for &p in graph.vertices() {
        if graph.is_isolated(p)? {
            eprintln!("  {{{p}}} is a component on its own");
        }
    }
    print!("{}", graph.to_dot(&d.to_string()));
    Ok(())
}
