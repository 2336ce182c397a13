fn main() { println!("torikam"); }
