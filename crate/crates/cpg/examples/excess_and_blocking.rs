// The excess of a coalition measures how far an imputation leaves it short:
// v(c) minus what the coalition is paid. A positive excess means the
// coalition does better on its own, so it blocks the imputation.

use cpg::{blocks, excess, parse_imputation, Coalition, CpGame};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let game = CpGame::new([2u32, 3, 5])?;

    for split in ["10 10 10", "28 1 1", "2 4 24"] {
        let imp = parse_imputation(split, &game)?;
        println!("under ({split}):");
        for mask in 1u64..8 {
            let c = Coalition::from_mask(mask);
            let e = excess(&game, &imp, &c)?;
            let mark = if blocks(&game, &imp, &c)? { "  <- blocks" } else { "" };
            println!("  e({c}) = {e}{mark}");
        }
    }
    Ok(())
}
