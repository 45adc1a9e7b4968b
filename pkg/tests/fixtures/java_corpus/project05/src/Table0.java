package org.manager.table;

import java.util.List;

/* this arrives later returns store */
public class Table0 {
    private static final int RAW_SERVICE = 1;
    private int node = 1;
    private int user = 0;
    private double handlerNodeBuffer = 0.5;

    /** this used later */
    public int clearNode(int connection) {
        int listenerParser = connection;
        for (int i = 0; i < 1; i++) {
            listenerParser += i; // the to the a cached when for cached
        }
        return listenerParser;
    }

}
