import { describe, expect, it } from 'vitest'

import { MoreResult, PathEntry, SessionState } from '../src/api.js'
import { SessionView, validateNextPoint } from '../src/state.js'

function entry(expression: string, badness: number): PathEntry {
    return { expression, badness, nodes: [], labels: [] }
}

function sessionState(paths: PathEntry[]): SessionState {
    return {
        session_id: 'abc',
        points: ['D', 'C'],
        c_weight: 0.5,
        pairs: [{ start: 'D', goal: 'C', paths, exhausted: false }],
    }
}

describe('SessionView', () => {
    it('preselects the most likely path', () => {
        const view = new SessionView(sessionState([entry('D . C', 2.5)]))
        expect(view.pairs[0].selected).toBe(0)
    })

    it('has no selection before any path arrives', () => {
        const view = new SessionView(sessionState([]))
        expect(view.pairs[0].selected).toBe(-1)
    })

    it('appends MORE results without touching earlier entries', () => {
        const view = new SessionView(sessionState([entry('one', 2.5)]))
        const before = [...view.pairs[0].entries]
        const result: MoreResult = {
            pair_index: 0,
            new_paths: [entry('two', 3), entry('three', 3)],
            exhausted: true,
        }
        view.applyMore(0, result)
        expect(view.pairs[0].entries.slice(0, 1)).toEqual(before)
        expect(view.pairs[0].entries.map((e) => e.expression)).toEqual(
            ['one', 'two', 'three'])
        expect(view.pairs[0].exhausted).toBe(true)
    })

    it('rejects out-of-order releases', () => {
        const view = new SessionView(sessionState([entry('one', 2.5)]))
        const bad: MoreResult = {
            pair_index: 0,
            new_paths: [entry('zero', 1)],
            exhausted: false,
        }
        expect(() => view.applyMore(0, bad)).toThrow(/out of order/)
    })

    it('tracks the selected entry per pair', () => {
        const view = new SessionView(sessionState([entry('one', 2.5)]))
        view.applyMore(0, {
            pair_index: 0, new_paths: [entry('two', 3)], exhausted: false,
        })
        view.select(0, 1)
        expect(view.pairs[0].selected).toBe(1)
        expect(() => view.select(0, 9)).toThrow(/no entry/)
    })
})

describe('validateNextPoint', () => {
    it('rejects adjacent duplicates', () => {
        expect(validateNextPoint(['D'], 'D')).toMatch(/distinct/)
    })

    it('allows a repeat once another point intervenes', () => {
        expect(validateNextPoint(['D', 'C'], 'D')).toBeNull()
    })

    it('rejects blank names', () => {
        expect(validateNextPoint([], '  ')).not.toBeNull()
    })
})
