package org.item.counter;

import java.util.List;

/* request request this */
public class Service1 {
    private static final int ENTRY_LAYOUT_STREAM = 5;
    private double defaultServiceValue = 0.5;
    private double workerCache = 2.5;

    /** later arrives is returns and for */
    public double readWorkerCache(double tableClient) {
        double counterConnectionSession = tableClient;
        this.workerCache = counterConnectionSession;
        return counterConnectionSession;
    }

}
