from freeway_oracle.env import Action, GameConfig, replay, reset, step
from freeway_oracle.experiments import ScenarioSpec, generate_dataset, play_full_game, solve_scenario
from freeway_oracle.logger import configure_logging, log_search_progress
from freeway_oracle.oracle import CrossingSearch, solve_crossing
from freeway_oracle.store import open_store
from freeway_oracle.trace_io import render_ascii, verify_trace, write_results, write_search_graph, write_trace

# Logging per-solve summaries

configure_logging()
log_search_progress()

# Stepping the simulator

config = GameConfig()

state = reset(seed=3, config=config)
state, result = step(state, Action.UP, config)

print(state.t, state.y, result.collided, result.crossed)

# Replaying a sequence of actions from a fresh game

state = replay(3, [Action.STAY] * 100 + [Action.UP] * 20, config)

# Solving a single crossing

solution = solve_crossing(seed=3, prefix=[Action.STAY] * 100, config=config)

print(solution.length, solution.nodes_expanded)

# Keeping the search around to export its graph

search = CrossingSearch(seed=3, prefix=[Action.STAY] * 100, config=config)
solution = search.run()
write_search_graph(search.graph, "graph.csv", solution)

# Without jitter the dynamics are Markovian in (t, y) and the oracle is exact

deterministic = GameConfig(deterministic_mode=True)
assert solve_crossing(seed=0, prefix=[], config=deterministic).length == 57

# Scenarios and datasets

result = solve_scenario(ScenarioSpec(seed=4211, start_t=873), config)
results = generate_dataset(n=50, sampling_seed=7, config=config, workers=4)
write_results(results, "scenarios.csv")

# Full games

trace = play_full_game(seed=0, config=config)
verify_trace(trace)
write_trace(trace, "seed-0.json")

print(render_ascii(trace, t=120))

# Persisting results

store = open_store("sqlite:///runs.db")
store.save_scenarios(results, config)
store.save_game(trace)
store.close()
