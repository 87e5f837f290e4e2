mod common;

use cliquenet::edgelist::{edge_list_string, read_edge_list};
use cliquenet::generator::{CliqueNetConfig, CliqueNetGrower};
use proptest::prelude::*;

fn config() -> impl Strategy<Value = CliqueNetConfig> {
    (3usize..9, 0.0f64..1.0, 0.0f64..=1.0, 0usize..200, any::<u64>()).prop_map(
        |(a, m_frac, p, steps, seed)| {
            let m = (1 + ((a - 1) as f64 * m_frac) as usize).min(a - 1);
            CliqueNetConfig::new(a, m, p).steps(steps).seed(seed)
        },
    )
}

proptest! {
    #[test]
    fn growth_laws_hold_at_every_step(cfg in config()) {
        let (a, m) = (cfg.clique_size, cfg.attachment_count);
        let mut grower = CliqueNetGrower::new(&cfg).unwrap();
        let full = a * (a - 1) / 2;
        prop_assert_eq!(grower.graph().edge_count(), full);
        for t in 1..=cfg.step_count() {
            let before = grower.graph().edge_count();
            let rec = grower.step().unwrap();
            let g = grower.graph();
            prop_assert_eq!(g.node_count(), a + t * (a - m));
            prop_assert_eq!(g.edge_count(), before + rec.edges_added);
            // the new clique minus whatever already joined the attachment nodes
            prop_assert!(rec.edges_added <= full);
            prop_assert!(rec.edges_added >= full - m * (m - 1) / 2);
            if m == 1 {
                prop_assert_eq!(g.edge_count(), (t + 1) * full);
            }
        }
        let g = grower.finish().unwrap();
        prop_assert!(g.is_connected());
        prop_assert_eq!(g.degrees().min(), Some(a - 1));
        prop_assert!(g.mean_degree() <= cfg.mean_degree_bound() + 1e-12);
        g.validate().unwrap();
    }

    #[test]
    fn same_seed_same_bytes(cfg in config()) {
        let run = || {
            let g = cliquenet::generator::evolve(&cfg).unwrap();
            edge_list_string(&g, &cfg.provenance())
        };
        let text = run();
        prop_assert_eq!(&text, &run());
        let (back, prov) = read_edge_list(text.as_bytes()).unwrap();
        prop_assert_eq!(back.edge_count(), cliquenet::generator::evolve(&cfg).unwrap().edge_count());
        let seed = cfg.seed.to_string();
        prop_assert_eq!(prov.get("seed"), Some(seed.as_str()));
    }
}
